"""Sequence tables for small parameters, used by ``verify`` and the tests."""

# linearizations of (2,2,2) starting with 00, grouped by rotation order
LINEARIZED_00_2_2_2 = {
    1: ['00010111', '00011011', '00011101', '00100111', '00101110', '00110110', '00111010', '00111001'],
    2: ['00110011'],
}

CYCLIC_2_2_2 = {
    1: ['00010111', '00011011', '00011101', '00100111'],
    2: ['00110011'],
}

LINEAR_2_2_2 = [
    '000101110',
    '000110110',
    '000111010',
    '001001110',
    '001011100',
    '001100110',
    '001101100',
    '001110010',
    '001110100',
    '010001110',
    '010011100',
    '010111000',
    '011000110',
    '011001100',
    '011011000',
    '011100010',
    '011100100',
    '011101000',
    '100010111',
    '100011011',
    '100011101',
    '100100111',
    '100110011',
    '100111001',
    '101000111',
    '101100011',
    '101110001',
    '110001011',
    '110001101',
    '110010011',
    '110011001',
    '110100011',
    '110110001',
    '111000101',
    '111001001',
    '111010001',
]

MULTICYCLIC_2_2_2 = [
    '(0)(0)(01)(01)(1)(1)',
    '(0)(001011)(1)',
    '(0001)(01)(1)(1)',
    '(00011)(01)(1)',
    '(0)(0)(01)(011)(1)',
    '(0)(0010111)',
    '(0001)(011)(1)',
    '(000111)(01)',
    '(0)(0)(01)(0111)',
    '(0)(0011)(011)',
    '(0001)(0111)',
    '(00011011)',
    '(0)(0)(01011)(1)',
    '(0)(00101)(1)(1)',
    '(0001011)(1)',
    '(001)(001)(1)(1)',
    '(0)(0)(010111)',
    '(0)(001101)(1)',
    '(00010111)',
    '(001)(0011)(1)',
    '(0)(0)(011)(011)',
    '(0)(0011101)',
    '(00011)(011)',
    '(001)(00111)',
    '(0)(001)(01)(1)(1)',
    '(0)(0011)(01)(1)',
    '(000101)(1)(1)',
    '(0010011)(1)',
    '(0)(001)(011)(1)',
    '(0)(00111)(01)',
    '(0001101)(1)',
    '(00100111)',
    '(0)(001)(0111)',
    '(0)(0011011)',
    '(00011101)',
    '(0011)(0011)',
]

# (transform, multicyclic sequence, is a single cycle or a power of one)
EBWT_PAIRS_2_2_2 = [
    ('00110011', '(0)(0)(01)(01)(1)(1)', False),
    ('00110101', '(0)(0)(01)(011)(1)', False),
    ('00110110', '(0)(0)(01)(0111)', False),
    ('00111001', '(0)(0)(01011)(1)', False),
    ('00111010', '(0)(0)(010111)', False),
    ('00111100', '(0)(0)(011)(011)', False),
    ('01010011', '(0)(001)(01)(1)(1)', False),
    ('01010101', '(0)(001)(011)(1)', False),
    ('01010110', '(0)(001)(0111)', False),
    ('01011001', '(0)(001011)(1)', False),
    ('01011010', '(0)(0010111)', False),
    ('01011100', '(0)(0011)(011)', False),
    ('01100011', '(0)(00101)(1)(1)', False),
    ('01100101', '(0)(001101)(1)', False),
    ('01100110', '(0)(0011101)', False),
    ('01101001', '(0)(0011)(01)(1)', False),
    ('01101010', '(0)(00111)(01)', False),
    ('01101100', '(0)(0011011)', False),
    ('10010011', '(0001)(01)(1)(1)', False),
    ('10010101', '(0001)(011)(1)', False),
    ('10010110', '(0001)(0111)', False),
    ('10011001', '(0001011)(1)', False),
    ('10011010', '(00010111)', True),
    ('10011100', '(00011)(011)', False),
    ('10100011', '(000101)(1)(1)', False),
    ('10100101', '(0001101)(1)', False),
    ('10100110', '(00011101)', True),
    ('10101001', '(00011)(01)(1)', False),
    ('10101010', '(000111)(01)', False),
    ('10101100', '(00011011)', True),
    ('11000011', '(001)(001)(1)(1)', False),
    ('11000101', '(001)(0011)(1)', False),
    ('11000110', '(001)(00111)', False),
    ('11001001', '(0010011)(1)', False),
    ('11001010', '(00100111)', True),
    ('11001100', '(0011)(0011)', True),
]

CYCLIC_2_2_3 = [
    '0000100101101111',
    '0000100101110111',
    '0000100101111011',
    '0000100110101111',
    '0000100110111101',
    '0000100111010111',
    '0000100111011101',
    '0000100111101011',
    '0000100111101101',
    '0000101001101111',
    '0000101001110111',
    '0000101001111011',
    '0000101011001111',
    '0000101011100111',
    '0000101011110011',
    '0000101100101111',
    '0000101100111101',
    '0000101101001111',
    '0000101101111001',
    '0000101110010111',
    '0000101110011101',
    '0000101110100111',
    '0000101110111001',
    '0000101111001011',
    '0000101111001101',
    '0000101111010011',
    '0000101111011001',
    '0000110010101111',
    '0000110010111101',
    '0000110011110101',
    '0000110100101111',
    '0000110100111101',
    '0000110101001111',
    '0000110101111001',
    '0000110111100101',
    '0000110111101001',
    '0000111001010111',
    '0000111001011101',
    '0000111001110101',
    '0000111010010111',
    '0000111010011101',
    '0000111010100111',
    '0000111010111001',
    '0000111011100101',
    '0000111011101001',
    '0000111100101011',
    '0000111100101101',
    '0000111100110101',
    '0000111101001011',
    '0000111101001101',
    '0000111101010011',
    '0000111101011001',
    '0000111101100101',
    '0000111101101001',
    '0001000101101111',
    '0001000101110111',
    '0001000101111011',
    '0001000110101111',
    '0001000110111101',
    '0001000111010111',
    '0001000111011101',
    '0001000111101011',
    '0001000111101101',
    '0001010001101111',
    '0001010001110111',
    '0001010001111011',
    '0001010110001111',
    '0001010111000111',
    '0001010111100011',
    '0001011000101111',
    '0001011000111101',
    '0001011010001111',
    '0001011100010111',
    '0001011100011101',
    '0001011101000111',
    '0001011110001101',
    '0001011110100011',
    '0001100011110101',
    '0001101000111101',
    '0001101010001111',
    '0001110001110101',
    '0001110100011101',
]
