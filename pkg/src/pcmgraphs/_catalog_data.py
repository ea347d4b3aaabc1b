"""Catalog graphs as transcribed: graph6 string, bullet matrix, edge list.

Transcribed once and kept verbatim, typos included; ``catalog``
reconciles and verifies them.
"""

# (n, k, d, name, count claimed, count exact, graph6, matrix, edge list)
# matrix: one string per row, "1" where the row vertex is compared with
# a later column vertex (upper triangle only, columns after the diagonal)
ENTRIES = [
    (
        5, 3, 2, None, 2, False,
        'D}k',
        (
            '1111',
            '110',
            '01',
            '1',
        ),
        (
            '1-2 1-3 1-4 1-5 2-3 2-4 3-5 4-5'
        ),
    ),
    (
        6, 3, 2, '3-prism graph', 2, True,
        'E{Sw',
        (
            '11100',
            '1010',
            '001',
            '11',
            '1',
        ),
        (
            '1-2 1-3 1-4 2-3 2-5 3-6 4-5 4-6 5-6'
        ),
    ),
    (
        7, 3, 2, None, 2, False,
        'FsdrO',
        (
            '111001',
            '00110',
            '0110',
            '101',
            '00',
            '1',
        ),
        (
            '1-2 1-3 1-4 1-7 2-5 2-6 3-5 3-6 4-5 4-7 6-7'
        ),
    ),
    (
        8, 3, 2, 'Wagner graph', 2, True,
        'GhdHKc',
        (
            '1001001',
            '100100',
            '10010',
            '1001',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-5 1-8 2-3 2-6 3-4 3-7 4-5 4-8 5-6 6-7 7-8'
        ),
    ),
    (
        9, 3, 2, None, 1, False,
        'HsT@PWU',
        (
            '10110000',
            '1001000',
            '100110',
            '00001',
            '0110',
            '011',
            '01',
            '0',
        ),
        (
            '1-2 1-4 1-5 2-3 2-6 3-4 3-7 3-8 4-9 5-7 5-8 6-8 6-9 7-9'
        ),
    ),
    (
        10, 3, 2, 'Petersen graph', 1, True,
        'IUYAHCPBG',
        (
            '011010000',
            '01101000',
            '0100100',
            '000010',
            '00001',
            '1001',
            '100',
            '10',
            '1',
        ),
        (
            '1-3 1-4 1-6 2-4 2-5 2-7 3-5 3-8 4-9 5-10 6-7 6-10 7-8 8-9 9-10'
        ),
    ),
    (
        11, 3, 3, None, 34, False,
        'J{COXCPAIG_',
        (
            '1110000000',
            '100000010',
            '00010000',
            '1001001',
            '100100',
            '10001',
            '1000',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-3 1-4 2-3 2-10 3-7 4-5 4-8 4-11 5-6 5-9 6-7 6-11 7-8 8-9 '
            '9-10 10-11'
        ),
    ),
    (
        12, 3, 3, 'Tietze graph', 34, True,
        'KhDGHEH_?__R',
        (
            '10000001100',
            '1001000000',
            '100010000',
            '10000010',
            '1001000',
            '100000',
            '10001',
            '1000',
            '000',
            '11',
            '1',
        ),
        (
            '1-2 1-9 1-10 2-3 2-6 3-4 3-8 4-5 4-11 5-6 5-9 6-7 7-8 7-12 8-9 '
            '10-11 10-12 11-12'
        ),
    ),
    (
        13, 3, 3, None, 34, False,
        'LhcIGCP_GGc@_P',
        (
            '100100001001',
            '10001000000',
            '1000000010',
            '100010000',
            '10000000',
            '1000100',
            '100000',
            '10001',
            '1000',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-5 1-10 1-13 2-3 2-7 3-4 3-12 4-5 4-9 5-6 6-7 6-11 7-8 8-9 '
            '8-13 9-10 10-11 11-12 12-13'
        ),
    ),
    (
        14, 3, 3, 'Heawood graph', 34, True,
        'MhEGHC@AI?_PC@_G_',
        (
            '1000100000001',
            '100000001000',
            '10001000000',
            '1000000010',
            '100010000',
            '10000000',
            '1000100',
            '100000',
            '10001',
            '1000',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-6 1-14 2-3 2-11 3-4 3-8 4-5 4-13 5-6 5-10 6-7 7-8 7-12 8-9 '
            '9-10 9-14 10-11 11-12 12-13 13-14'
        ),
    ),
    (
        15, 3, 3, None, 14, False,
        'N{O___GA?G?k?i?d?J?',
        (
            '11100000000000',
            '1010000000000',
            '001000000000',
            '00110000000',
            '0001100000',
            '000011000',
            '00000110',
            '0001001',
            '001100',
            '00011',
            '0101',
            '010',
            '00',
            '0',
        ),
        (
            '1-2 1-3 1-4 2-3 2-5 3-6 4-7 4-8 5-9 5-10 6-11 6-12 7-13 7-14 '
            '8-12 8-15 9-12 9-13 10-14 10-15 11-13 11-15 12-14'
        ),
    ),
    (
        16, 3, 3, None, 14, True,
        'O{O___GA?G?_?i?d?K_Ao',
        (
            '111000000000000',
            '10100000000000',
            '0010000000000',
            '001100000000',
            '00011000000',
            '0000110000',
            '000001100',
            '00000011',
            '0001010',
            '000101',
            '01001',
            '0110',
            '000',
            '00',
            '0',
        ),
        (
            '1-2 1-3 1-4 2-3 2-5 3-6 4-7 4-8 5-9 5-10 6-11 6-12 7-13 7-14 '
            '8-15 8-16 9-13 9-15 10-14 10-16 11-13 11-16 12-14 12-15'
        ),
    ),
    (
        17, 3, 3, None, 1, False,
        'PhCGKCH?K?_PG@?Cg?GG@c?C',
        (
            '1000001001000001',
            '100000000000100',
            '10000000010000',
            '1000000000001',
            '100100000000',
            '10000000010',
            '1000100000',
            '100000000',
            '10000000',
            '1001000',
            '100000',
            '10000',
            '1000',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-8 1-11 1-17 2-3 2-15 3-4 3-13 4-5 4-17 5-6 5-9 6-7 6-16 '
            '7-8 7-12 8-9 9-10 10-11 10-14 11-12 12-13 13-14 14-15 15-16 '
            '16-17'
        ),
    ),
    (
        18, 3, 3, '(3,3) graph on 18 vertices', 1, True,
        'QhCGKCH?G?_PG@?Cg?GG@C?E?GG',
        (
            '10000010000000001',
            '1000000000001000',
            '100000000100000',
            '10000000000010',
            '1001000000000',
            '100000000100',
            '10001000000',
            '1000000000',
            '100000000',
            '10010000',
            '1000001',
            '100000',
            '10000',
            '1000',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-8 1-18 2-3 2-15 3-4 3-13 4-5 4-17 5-6 5-9 6-7 6-16 7-8 '
            '7-12 8-9 9-10 10-11 10-14 11-12 11-18 12-13 13-14 14-15 15-16 '
            '16-17 17-18'
        ),
    ),
    (
        19, 3, 3, None, 1, False,
        'RhECQ?_@G?`@@?C?_G_AO?_S?_G?DG',
        (
            '100011000000000000',
            '10000100000000000',
            '1000010000000000',
            '100000000100000',
            '01000010000000',
            '0001001000000',
            '000000000100',
            '00000011000',
            '1000000010',
            '100000000',
            '10001000',
            '0010000',
            '100001',
            '00100',
            '0001',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-6 1-7 2-3 2-8 3-4 3-9 4-5 4-14 5-7 5-12 6-10 6-13 7-17 '
            '8-15 8-16 9-10 9-18 10-11 11-12 11-16 12-15 13-14 13-19 14-17 '
            '15-19 16-17 17-18 18-19'
        ),
    ),
    (
        20, 3, 3, '(3,3)-graph on 20 vertices (C5xF4)', 1, True,
        'ShECQ?_@G?`@@?C?_G_AO?_??@W@?O?DC',
        (
            '1000110000000000000',
            '100001000000000000',
            '10000100000000000',
            '1000000001000000',
            '010000100000000',
            '00010010000000',
            '0000000001000',
            '000000110000',
            '10000000010',
            '1000000000',
            '100010000',
            '00100000',
            '1000001',
            '000100',
            '00001',
            '0100',
            '110',
            '00',
            '1',
        ),
        (
            '1-2 1-6 1-7 2-3 2-8 3-4 3-9 4-5 4-14 5-7 5-12 6-10 6-13 7-17 '
            '8-15 8-16 9-10 9-19 10-11 11-12 11-16 12-15 13-14 13-20 14-18 '
            '15-20 16-18 17-18 17-19 19-20'
        ),
    ),
    (
        11, 4, 2, '4-Andrásfai graph', 37, True,
        'JlSggUDOlA_',
        (
            '1010000101',
            '101000010',
            '10100001',
            '1010000',
            '101000',
            '10100',
            '1010',
            '101',
            '10',
            '1',
        ),
        (
            '1-2 1-4 1-9 1-11 2-3 2-5 2-10 3-4 3-16 3-11 4-5 4-7 5-6 5-8 6-7 '
            '6-9 7-8 7-10 8-9 8-11 9-10 10-11'
        ),
    ),
    (
        12, 4, 2, 'Chvátal graph', 26, True,
        'KG@LIchdMoV?',
        (
            '00000100111',
            '1001010010',
            '000101001',
            '00010111',
            '1001011',
            '100100',
            '10000',
            '1000',
            '100',
            '00',
            '0',
        ),
        (
            '1-7 1-10 1-11 1-12 2-3 2-6 2-8 2-11 3-7 3-9 3-12 4-8 4-10 4-11 '
            '4-12 5-6 5-9 5-11 5-12 6-7 6-10 7-8 8-9 9-10'
        ),
    ),
    (
        13, 4, 2, '13-cyclotomic graph', 10, True,
        'LhEIHEPQHGaPaP',
        (
            '100010010001',
            '10001001000',
            '1000100100',
            '100010010',
            '10001001',
            '1000100',
            '100010',
            '10001',
            '1000',
            '100',
            '10',
            '1',
        ),
        (
            '1-2 1-6 1-9 1-13 2-3 2-7 2-10 3-4 3-8 3-11 4-5 4-9 4-12 5-6 5-10 '
            '5-13 6-7 6-11 7-8 7-12 8-9 8-13 9-10 10-11 11-12 12-13'
        ),
    ),
    (
        14, 4, 2, 'Unique graph on 14 vertices', 1, True,
        'Mo?CB`gXCw@wDgEc?',
        (
            '1100010001000',
            '000001110000',
            '00001110000',
            '0001001011',
            '000101101',
            '00011110',
            '0000111',
            '000100',
            '00010',
            '0001',
            '000',
            '00',
            '0',
        ),
        (
            '1-2 1-3 1-7 1-11 2-8 2-9 2-10 3-8 3-9 3-10 4-8 4-11 4-13 4-14 '
            '5-9 5-11 5-12 5-14 6-10 6-11 6-12 6-13 7-12 7-13 7-14 8-12 9-13 '
            '10-14'
        ),
    ),
    (
        15, 4, 2, 'Unique graph on 15 vertices', 1, True,
        'N?ACE`cL?wTGEgQcKP?',
        (
            '00001110001000',
            '0000011000011',
            '000001101001',
            '00010110100',
            '0000011110',
            '001110000',
            '00000111',
            '0001000',
            '000100',
            '00010',
            '0001',
            '000',
            '00',
            '0',
        ),
        (
            '1-6 1-7 1-8 1-12 2-8 2-9 2-14 2-15 3-9 3-10 3-12 3-15 4-8 4-10 '
            '4-11 4-13 5-11 5-12 5-13 5-14 6-9 6-10 6-11 7-13 7-14 7-15 8-12 '
            '9-13 10-14 11-15'
        ),
    ),
    (
        16, 5, 2, 'Clebsch graph', 3, False,
        'OPtcIcSoGT@__XWAcJ_ci',
        (
            '010101001001000',
            '00110101000100',
            '1010000000110',
            '100110000001',
            '00000110000',
            '1010010000',
            '100100001',
            '00001010',
            '1101000',
            '000011',
            '00110',
            '1011',
            '100',
            '01',
            '0',
        ),
        (
            '1-3 1-5 1-7 1-10 1-13 2-5 2-6 2-8 2-10 2-14 3-4 3-6 3-14 3-15 '
            '4-5 4-8 4-9 4-16 5-11 5-12 6-7 6-9 6-12 7-8 7-11 7-16 8-13 8-15 '
            '9-10 9-11 9-13 10-15 10-16 11-14 11-15 12-13 12-15 12-16 13-14 '
            '14-16'
        ),
    ),
    (
        17, 5, 2, None, 1, False,
        'PxCYHEBCIO_bGPagiAOQP`@K',
        (
            '1100000100001001',
            '100010001000100',
            '10001000010000',
            '1100010000100',
            '100001001010',
            '10000100001',
            '1100001000',
            '100010010',
            '10001000',
            '1100100',
            '100010',
            '10001',
            '1100',
            '000',
            '11',
            '1',
        ),
        (
            '1-2 1-3 1-9 1-14 1-17 2-3 2-7 2-11 2-15 3-4 3-8 3-13 4-5 4-6 '
            '4-10 4-15 5-6 5-11 5-14 5-16 6-7 6-12 6-17 7-8 7-9 7-14 8-9 8-13 '
            '8-16 9-10 9-14 10-11 10-12 10-15 11-12 11-16 12-13 12-17 13-14 '
            '13-15 15-16 15-17 16-17'
        ),
    ),
    (
        18, 5, 2, '(18,1)-noncayley transitive graph', 1, False,
        'Q{eAaSqIWI?o@D@IG?X?WCAkGDo',
        (
            '11111000000000000',
            '1000110000001000',
            '000001100000100',
            '10101000000010',
            '0010100000001',
            '000011110000',
            '11001000000',
            '0110000000',
            '100010000',
            '00100000',
            '0010110',
            '100101',
            '01010',
            '1001',
            '011',
            '11',
            '0',
        ),
        (
            '1-2 1-3 1-4 1-5 1-6 2-3 2-7 2-8 2-15 3-9 3-10 3-16 4-5 4-7 4-9 '
            '4-17 5-8 5-10 5-18 6-11 6-12 6-13 6-14 7-8 7-9 7-12 8-10 8-11 '
            '9-10 9-14 10-13 11-14 11-16 11-17 12-13 12-16 12-18 13-15 13-17 '
            '14-15 14-18 15-17 15-18 16-17 16-18'
        ),
    ),
    (
        19, 5, 2, None, 1, False,
        'RzAKQQPD@AbOI?O_?Z?IK@BO?rO@FO',
        (
            '110011010000000000',
            '11000100000100000',
            '1000000101000000',
            '000011010000000',
            '11100011000000',
            '0001000001100',
            '000010110000',
            '10100011000',
            '0000000011',
            '100010010',
            '00010100',
            '0001100',
            '001011',
            '00111',
            '0001',
            '010',
            '01',
            '0',
        ),
        (
            '1-2 1-3 1-6 1-7 1-9 2-3 2-4 2-8 2-14 3-4 3-11 3-13 4-9 4-10 4-12 '
            '5-6 5-7 5-8 5-12 5-13 6-10 6-16 6-17 7-12 7-14 7-15 8-9 8-15 '
            '8-16 8-11 9-18 9-19 10-11 10-15 10-18 11-15 11-17 12-16 12-17 '
            '13-16 13-18 13-19 14-17 14-18 14-19 15-19 16-18 17-19'
        ),
    ),
    (
        20, 5, 2, '(20,8)-noncayley transitive graph', 1, False,
        'Ssa@Gt`PQcHOGCGC?cOHAC@cOD_OSgORO',
        (
            '1111100000000000000',
            '000000111100000000',
            '00010100011000000',
            '0001001000001100',
            '001000100000011',
            '10010000110000',
            '1001100000000',
            '110000000000',
            '00000110000',
            '0011000000',
            '000000011',
            '00001100',
            '0101010',
            '010101',
            '00101',
            '1010',
            '001',
            '10',
            '0',
        ),
        (
            '1-2 1-3 1-4 1-5 1-6 2-9 2-10 2-11 2-12 3-7 3-9 3-13 3-14 4-8 '
            '4-11 4-17 4-18 5-8 5-12 5-19 5-20 6-7 6-10 6-15 6-16 7-8 7-11 '
            '7-12 8-9 8-10 9-15 9-16 10-13 10-14 11-19 11-20 12-17 12-18 '
            '13-15 13-17 13-19 14-16 14-18 14-20 15-18 15-20 16-17 16-19 '
            '17-20 18-19'
        ),
    ),
]
