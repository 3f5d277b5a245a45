// Generated golden data; do not edit by hand.

use rrcrystal_core::AffineType;

/// `c(p) = d(p)` for `p = 1..=60`.
pub const COEFFICIENTS: [(AffineType, [u64; 60]); 7] = [
    (
        AffineType::G2_1,
        [
            1, 1, 1, 1, 2, 4, 5, 5, 6, 7, 10, 15, 18, 20, 23, 27, 35, 47, 56, 63, 73, 85, 105, 133,
            156, 177, 203, 235, 282, 343, 399, 452, 516, 593, 698, 829, 954, 1079, 1225, 1398,
            1622, 1892, 2161, 2436, 2753, 3123, 3583, 4126, 4680, 5258, 5914, 6672, 7588, 8650,
            9755, 10920, 12232, 13732, 15506, 17537,
        ],
    ),
    (
        AffineType::D4_3,
        [
            1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 14, 17, 19, 23, 30, 36, 41, 49, 61, 72, 82, 97, 119,
            139, 158, 184, 220, 256, 291, 337, 397, 457, 518, 596, 695, 796, 899, 1027, 1186, 1351,
            1523, 1731, 1982, 2246, 2524, 2856, 3252, 3669, 4111, 4630, 5240, 5891, 6584, 7389,
            8322, 9319, 10388, 11618, 13032,
        ],
    ),
    (
        AffineType::F4_1,
        [
            1, 1, 1, 1, 2, 2, 3, 4, 4, 5, 6, 9, 11, 12, 14, 16, 20, 23, 28, 33, 37, 43, 50, 62, 72,
            81, 92, 105, 123, 140, 162, 186, 209, 237, 270, 314, 357, 400, 450, 507, 576, 648, 733,
            825, 921, 1031, 1157, 1310, 1467, 1632, 1817, 2025, 2265, 2521, 2812, 3129, 3466, 3843,
            4266, 4754,
        ],
    ),
    (
        AffineType::E6_2,
        [
            1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 19, 22, 25, 28, 32, 38, 43, 50,
            56, 65, 74, 84, 95, 107, 122, 136, 154, 173, 198, 222, 248, 276, 308, 347, 386, 432,
            479, 536, 596, 662, 734, 813, 903, 996, 1103, 1218, 1352, 1492, 1643, 1807, 1988, 2193,
            2409,
        ],
    ),
    (
        AffineType::E6_1,
        [
            1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 14, 17, 19, 23, 30, 36, 41, 49, 61, 72, 82, 97, 119,
            139, 158, 184, 220, 256, 291, 337, 397, 457, 518, 596, 695, 796, 899, 1027, 1186, 1351,
            1523, 1731, 1982, 2246, 2524, 2856, 3252, 3669, 4111, 4630, 5240, 5891, 6584, 7389,
            8322, 9319, 10388, 11618, 13032,
        ],
    ),
    (
        AffineType::E7_1,
        [
            1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 19, 22, 25, 28, 32, 38, 43, 50,
            56, 65, 74, 84, 95, 107, 122, 136, 154, 173, 198, 222, 248, 276, 308, 347, 386, 432,
            479, 536, 596, 662, 734, 813, 903, 996, 1103, 1218, 1352, 1492, 1643, 1807, 1988, 2193,
            2409,
        ],
    ),
    (
        AffineType::E8_1,
        [
            1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 5, 5, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 17, 18,
            20, 22, 26, 29, 31, 34, 37, 40, 44, 50, 54, 58, 63, 70, 76, 84, 92, 99, 106, 116, 127,
            138, 150, 162, 175, 189, 206, 222, 240, 258, 278, 300, 328,
        ],
    ),
];

/// Positive forbidden initial parts `(value, color)`.
pub const INITIAL_CONDITIONS: [(AffineType, &[(u32, &str)]); 7] = [
    (
        AffineType::G2_1,
        &[
            (1, "-10"),
            (1, "-01"),
            (2, "-11"),
            (3, "-12"),
            (4, "-13"),
            (5, "-23"),
        ],
    ),
    (AffineType::D4_3, &[(1, "-10"), (2, "-11"), (3, "-21")]),
    (
        AffineType::F4_1,
        &[
            (1, "-1000"),
            (1, "-0100"),
            (1, "-0010"),
            (1, "-0001"),
            (2, "-1100"),
            (2, "-0110"),
            (2, "-0011"),
            (3, "-1110"),
            (3, "-0120"),
            (3, "-0111"),
            (4, "-1120"),
            (4, "-1111"),
            (4, "-0121"),
            (5, "-1220"),
            (5, "-1121"),
            (5, "-0122"),
            (6, "-1221"),
            (6, "-1122"),
            (7, "-1231"),
            (7, "-1222"),
            (8, "-1232"),
            (9, "-1242"),
            (10, "-1342"),
            (11, "-2342"),
        ],
    ),
    (
        AffineType::E6_2,
        &[
            (1, "-1000"),
            (1, "-0100"),
            (2, "-0110"),
            (2, "-1100"),
            (3, "-0111"),
            (3, "-1110"),
            (4, "-1210"),
            (4, "-1111"),
            (5, "-1211"),
            (6, "-1221"),
            (7, "-1321"),
            (8, "-2321"),
        ],
    ),
    (
        AffineType::E6_1,
        &[
            (1, "-100000"),
            (1, "-010000"),
            (1, "-001000"),
            (1, "-000100"),
            (1, "-000010"),
            (1, "-000001"),
            (2, "-101000"),
            (2, "-010100"),
            (2, "-001100"),
            (2, "-000110"),
            (2, "-000011"),
            (3, "-101100"),
            (3, "-011100"),
            (3, "-010110"),
            (3, "-001110"),
            (3, "-000111"),
            (4, "-111100"),
            (4, "-101110"),
            (4, "-011110"),
            (4, "-010111"),
            (4, "-001111"),
            (5, "-111110"),
            (5, "-101111"),
            (5, "-011210"),
            (5, "-011111"),
            (6, "-111210"),
            (6, "-111111"),
            (6, "-011211"),
            (7, "-112210"),
            (7, "-111211"),
            (7, "-011221"),
            (8, "-112211"),
            (8, "-111221"),
            (9, "-112221"),
            (10, "-112321"),
            (11, "-122321"),
        ],
    ),
    (
        AffineType::E7_1,
        &[
            (1, "-1000000"),
            (1, "-0100000"),
            (1, "-0010000"),
            (1, "-0001000"),
            (1, "-0000100"),
            (1, "-0000010"),
            (1, "-0000001"),
            (2, "-1010000"),
            (2, "-0101000"),
            (2, "-0011000"),
            (2, "-0001100"),
            (2, "-0000110"),
            (2, "-0000011"),
            (3, "-1011000"),
            (3, "-0111000"),
            (3, "-0101100"),
            (3, "-0011100"),
            (3, "-0001110"),
            (3, "-0000111"),
            (4, "-1111000"),
            (4, "-1011100"),
            (4, "-0111100"),
            (4, "-0101110"),
            (4, "-0011110"),
            (4, "-0001111"),
            (5, "-1111100"),
            (5, "-1011110"),
            (5, "-0112100"),
            (5, "-0111110"),
            (5, "-0101111"),
            (5, "-0011111"),
            (6, "-1112100"),
            (6, "-1111110"),
            (6, "-1011111"),
            (6, "-0112110"),
            (6, "-0111111"),
            (7, "-1122100"),
            (7, "-1112110"),
            (7, "-1111111"),
            (7, "-0112210"),
            (7, "-0112111"),
            (8, "-1122110"),
            (8, "-1112210"),
            (8, "-1112111"),
            (8, "-0112211"),
            (9, "-1122210"),
            (9, "-1122111"),
            (9, "-1112211"),
            (9, "-0112221"),
            (10, "-1123210"),
            (10, "-1122211"),
            (10, "-1112221"),
            (11, "-1223210"),
            (11, "-1123211"),
            (11, "-1122221"),
            (12, "-1223211"),
            (12, "-1123221"),
            (13, "-1223221"),
            (13, "-1123321"),
            (14, "-1223321"),
            (15, "-1224321"),
            (16, "-1234321"),
            (17, "-2234321"),
        ],
    ),
    (
        AffineType::E8_1,
        &[
            (1, "-00000001"),
            (1, "-00000010"),
            (1, "-00000100"),
            (1, "-00001000"),
            (1, "-00010000"),
            (1, "-00100000"),
            (1, "-01000000"),
            (1, "-10000000"),
            (2, "-00000011"),
            (2, "-00000110"),
            (2, "-00001100"),
            (2, "-00011000"),
            (2, "-00110000"),
            (2, "-01010000"),
            (2, "-10100000"),
            (3, "-00000111"),
            (3, "-00001110"),
            (3, "-00011100"),
            (3, "-00111000"),
            (3, "-01011000"),
            (3, "-01110000"),
            (3, "-10110000"),
            (4, "-00001111"),
            (4, "-00011110"),
            (4, "-00111100"),
            (4, "-01011100"),
            (4, "-01111000"),
            (4, "-10111000"),
            (4, "-11110000"),
            (5, "-00011111"),
            (5, "-00111110"),
            (5, "-01011110"),
            (5, "-01111100"),
            (5, "-01121000"),
            (5, "-10111100"),
            (5, "-11111000"),
            (6, "-00111111"),
            (6, "-01011111"),
            (6, "-01111110"),
            (6, "-01121100"),
            (6, "-10111110"),
            (6, "-11111100"),
            (6, "-11121000"),
            (7, "-01111111"),
            (7, "-01121110"),
            (7, "-01122100"),
            (7, "-10111111"),
            (7, "-11111110"),
            (7, "-11121100"),
            (7, "-11221000"),
            (8, "-01121111"),
            (8, "-01122110"),
            (8, "-11111111"),
            (8, "-11121110"),
            (8, "-11122100"),
            (8, "-11221100"),
            (9, "-01122111"),
            (9, "-01122210"),
            (9, "-11121111"),
            (9, "-11122110"),
            (9, "-11221110"),
            (9, "-11222100"),
            (10, "-01122211"),
            (10, "-11122111"),
            (10, "-11122210"),
            (10, "-11221111"),
            (10, "-11222110"),
            (10, "-11232100"),
            (11, "-01122221"),
            (11, "-11122211"),
            (11, "-11222111"),
            (11, "-11222210"),
            (11, "-11232110"),
            (11, "-12232100"),
            (12, "-11122221"),
            (12, "-11222211"),
            (12, "-11232111"),
            (12, "-11232210"),
            (12, "-12232110"),
            (13, "-11222221"),
            (13, "-11232211"),
            (13, "-11233210"),
            (13, "-12232111"),
            (13, "-12232210"),
            (14, "-11232221"),
            (14, "-11233211"),
            (14, "-12232211"),
            (14, "-12233210"),
            (15, "-11233221"),
            (15, "-12232221"),
            (15, "-12233211"),
            (15, "-12243210"),
            (16, "-11233321"),
            (16, "-12233221"),
            (16, "-12243211"),
            (16, "-12343210"),
            (17, "-12233321"),
            (17, "-12243221"),
            (17, "-12343211"),
            (17, "-22343210"),
            (18, "-12243321"),
            (18, "-12343221"),
            (18, "-22343211"),
            (19, "-12244321"),
            (19, "-12343321"),
            (19, "-22343221"),
            (20, "-12344321"),
            (20, "-22343321"),
            (21, "-12354321"),
            (21, "-22344321"),
            (22, "-13354321"),
            (22, "-22354321"),
            (23, "-22454321"),
            (23, "-23354321"),
            (24, "-23454321"),
            (25, "-23464321"),
            (26, "-23465321"),
            (27, "-23465421"),
            (28, "-23465431"),
            (29, "-23465432"),
        ],
    ),
];

/// Congruence rows `(residue, colors)` with the modulus of each type.
/// `(residue, colors)` rows of one type.
pub type CongruenceRows = &'static [(u32, &'static [&'static str])];

pub const CONGRUENCE_ROWS: [(AffineType, u32, CongruenceRows); 7] = [
    (
        AffineType::G2_1,
        6,
        &[
            (0, &["phi", "r1", "r2"]),
            (1, &["-10", "-01", "+23"]),
            (2, &["+13", "-11"]),
            (3, &["+12", "-12"]),
            (4, &["+11", "-13"]),
            (5, &["+10", "+01", "-23"]),
        ],
    ),
    (
        AffineType::D4_3,
        4,
        &[
            (0, &["phi", "r1"]),
            (1, &["+21", "-10"]),
            (2, &["+11", "-11"]),
            (3, &["+10", "-21"]),
        ],
    ),
    (
        AffineType::F4_1,
        12,
        &[
            (0, &["phi", "r1", "r2", "r3", "r4"]),
            (1, &["-1000", "-0100", "-0010", "-0001", "+2342"]),
            (2, &["-1100", "-0110", "-0011", "+1342"]),
            (3, &["-1110", "-0120", "-0111", "+1242"]),
            (4, &["-1120", "-1111", "-0121", "+1232"]),
            (5, &["-1220", "-1121", "-0122", "+1231", "+1222"]),
            (6, &["-1221", "-1122", "+1221", "+1122"]),
            (7, &["-1231", "-1222", "+1220", "+1121", "+0122"]),
            (8, &["-1232", "+1120", "+1111", "+0121"]),
            (9, &["-1242", "+1110", "+0120", "+0111"]),
            (10, &["-1342", "+1100", "+0110", "+0011"]),
            (11, &["-2342", "+1000", "+0100", "+0010", "+0001"]),
        ],
    ),
    (
        AffineType::E6_2,
        9,
        &[
            (0, &["phi", "r1", "r2"]),
            (1, &["-1000", "-0100", "+2321"]),
            (2, &["-0110", "-1100", "+1321"]),
            (3, &["-0111", "-1110", "+1221"]),
            (4, &["-1210", "-1111", "+1211"]),
            (5, &["-1211", "+1111", "+1210"]),
            (6, &["-1221", "+0111", "+1110"]),
            (7, &["-1321", "+0110", "+1100"]),
            (8, &["-2321", "+1000", "+0100"]),
        ],
    ),
    (
        AffineType::E6_1,
        12,
        &[
            (0, &["phi", "r1", "r2", "r3", "r4", "r5", "r6"]),
            (
                1,
                &[
                    "-100000", "-010000", "-001000", "-000100", "-000010", "-000001", "+122321",
                ],
            ),
            (
                2,
                &[
                    "-101000", "-010100", "-001100", "-000110", "-000011", "+112321",
                ],
            ),
            (
                3,
                &[
                    "-101100", "-011100", "-010110", "-001110", "-000111", "+112221",
                ],
            ),
            (
                4,
                &[
                    "-111100", "-101110", "-011110", "-010111", "-001111", "+112211", "+111221",
                ],
            ),
            (
                5,
                &[
                    "-111110", "-101111", "-011210", "-011111", "+112210", "+111211", "+011221",
                ],
            ),
            (
                6,
                &[
                    "-111210", "-111111", "-011211", "+111210", "+111111", "+011211",
                ],
            ),
            (
                7,
                &[
                    "-112210", "-111211", "-011221", "+111110", "+101111", "+011210", "+011111",
                ],
            ),
            (
                8,
                &[
                    "-112211", "-111221", "+111100", "+101110", "+011110", "+010111", "+001111",
                ],
            ),
            (
                9,
                &[
                    "-112221", "+101100", "+011100", "+010110", "+001110", "+000111",
                ],
            ),
            (
                10,
                &[
                    "-112321", "+101000", "+010100", "+001100", "+000110", "+000011",
                ],
            ),
            (
                11,
                &[
                    "-122321", "+100000", "+010000", "+001000", "+000100", "+000010", "+000001",
                ],
            ),
        ],
    ),
    (
        AffineType::E7_1,
        18,
        &[
            (0, &["phi", "r1", "r2", "r3", "r4", "r5", "r6", "r7"]),
            (
                1,
                &[
                    "-1000000", "-0100000", "-0010000", "-0001000", "-0000100", "-0000010",
                    "-0000001", "+2234321",
                ],
            ),
            (
                2,
                &[
                    "-1010000", "-0101000", "-0011000", "-0001100", "-0000110", "-0000011",
                    "+1234321",
                ],
            ),
            (
                3,
                &[
                    "-1011000", "-0111000", "-0101100", "-0011100", "-0001110", "-0000111",
                    "+1224321",
                ],
            ),
            (
                4,
                &[
                    "-1111000", "-1011100", "-0111100", "-0101110", "-0011110", "-0001111",
                    "+1223321",
                ],
            ),
            (
                5,
                &[
                    "-1111100", "-1011110", "-0112100", "-0111110", "-0101111", "-0011111",
                    "+1223221", "+1123321",
                ],
            ),
            (
                6,
                &[
                    "-1112100", "-1111110", "-1011111", "-0112110", "-0111111", "+1223211",
                    "+1123221",
                ],
            ),
            (
                7,
                &[
                    "-1122100", "-1112110", "-1111111", "-0112210", "-0112111", "+1223210",
                    "+1123211", "+1122221",
                ],
            ),
            (
                8,
                &[
                    "-1122110", "-1112210", "-1112111", "-0112211", "+1123210", "+1122211",
                    "+1112221",
                ],
            ),
            (
                9,
                &[
                    "-1122210", "-1122111", "-1112211", "-0112221", "+1122210", "+1122111",
                    "+1112211", "+0112221",
                ],
            ),
            (
                10,
                &[
                    "-1123210", "-1122211", "-1112221", "+1122110", "+1112210", "+1112111",
                    "+0112211",
                ],
            ),
            (
                11,
                &[
                    "-1223210", "-1123211", "-1122221", "+1122100", "+1112110", "+1111111",
                    "+0112210", "+0112111",
                ],
            ),
            (
                12,
                &[
                    "-1223211", "-1123221", "+1112100", "+1111110", "+1011111", "+0112110",
                    "+0111111",
                ],
            ),
            (
                13,
                &[
                    "-1223221", "-1123321", "+1111100", "+1011110", "+0112100", "+0111110",
                    "+0101111", "+0011111",
                ],
            ),
            (
                14,
                &[
                    "-1223321", "+1111000", "+1011100", "+0111100", "+0101110", "+0011110",
                    "+0001111",
                ],
            ),
            (
                15,
                &[
                    "-1224321", "+1011000", "+0111000", "+0101100", "+0011100", "+0001110",
                    "+0000111",
                ],
            ),
            (
                16,
                &[
                    "-1234321", "+1010000", "+0101000", "+0011000", "+0001100", "+0000110",
                    "+0000011",
                ],
            ),
            (
                17,
                &[
                    "-2234321", "+1000000", "+0100000", "+0010000", "+0001000", "+0000100",
                    "+0000010", "+0000001",
                ],
            ),
        ],
    ),
    (
        AffineType::E8_1,
        30,
        &[
            (0, &["phi", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"]),
            (
                1,
                &[
                    "+23465432",
                    "-00000001",
                    "-00000010",
                    "-00000100",
                    "-00001000",
                    "-00010000",
                    "-00100000",
                    "-01000000",
                    "-10000000",
                ],
            ),
            (
                2,
                &[
                    "+23465431",
                    "-00000011",
                    "-00000110",
                    "-00001100",
                    "-00011000",
                    "-00110000",
                    "-01010000",
                    "-10100000",
                ],
            ),
            (
                3,
                &[
                    "+23465421",
                    "-00000111",
                    "-00001110",
                    "-00011100",
                    "-00111000",
                    "-01011000",
                    "-01110000",
                    "-10110000",
                ],
            ),
            (
                4,
                &[
                    "+23465321",
                    "-00001111",
                    "-00011110",
                    "-00111100",
                    "-01011100",
                    "-01111000",
                    "-10111000",
                    "-11110000",
                ],
            ),
            (
                5,
                &[
                    "+23464321",
                    "-00011111",
                    "-00111110",
                    "-01011110",
                    "-01111100",
                    "-01121000",
                    "-10111100",
                    "-11111000",
                ],
            ),
            (
                6,
                &[
                    "+23454321",
                    "-00111111",
                    "-01011111",
                    "-01111110",
                    "-01121100",
                    "-10111110",
                    "-11111100",
                    "-11121000",
                ],
            ),
            (
                7,
                &[
                    "+22454321",
                    "+23354321",
                    "-01111111",
                    "-01121110",
                    "-01122100",
                    "-10111111",
                    "-11111110",
                    "-11121100",
                    "-11221000",
                ],
            ),
            (
                8,
                &[
                    "+13354321",
                    "+22354321",
                    "-01121111",
                    "-01122110",
                    "-11111111",
                    "-11121110",
                    "-11122100",
                    "-11221100",
                ],
            ),
            (
                9,
                &[
                    "+12354321",
                    "+22344321",
                    "-01122111",
                    "-01122210",
                    "-11121111",
                    "-11122110",
                    "-11221110",
                    "-11222100",
                ],
            ),
            (
                10,
                &[
                    "+12344321",
                    "+22343321",
                    "-01122211",
                    "-11122111",
                    "-11122210",
                    "-11221111",
                    "-11222110",
                    "-11232100",
                ],
            ),
            (
                11,
                &[
                    "+12244321",
                    "+12343321",
                    "+22343221",
                    "-01122221",
                    "-11122211",
                    "-11222111",
                    "-11222210",
                    "-11232110",
                    "-12232100",
                ],
            ),
            (
                12,
                &[
                    "+12243321",
                    "+12343221",
                    "+22343211",
                    "-11122221",
                    "-11222211",
                    "-11232111",
                    "-11232210",
                    "-12232110",
                ],
            ),
            (
                13,
                &[
                    "+12233321",
                    "+12243221",
                    "+12343211",
                    "+22343210",
                    "-11222221",
                    "-11232211",
                    "-11233210",
                    "-12232111",
                    "-12232210",
                ],
            ),
            (
                14,
                &[
                    "+11233321",
                    "+12233221",
                    "+12243211",
                    "+12343210",
                    "-11232221",
                    "-11233211",
                    "-12232211",
                    "-12233210",
                ],
            ),
            (
                15,
                &[
                    "+11233221",
                    "+12232221",
                    "+12233211",
                    "+12243210",
                    "-11233221",
                    "-12232221",
                    "-12233211",
                    "-12243210",
                ],
            ),
            (
                16,
                &[
                    "+11232221",
                    "+11233211",
                    "+12232211",
                    "+12233210",
                    "-11233321",
                    "-12233221",
                    "-12243211",
                    "-12343210",
                ],
            ),
            (
                17,
                &[
                    "+11222221",
                    "+11232211",
                    "+11233210",
                    "+12232111",
                    "+12232210",
                    "-12233321",
                    "-12243221",
                    "-12343211",
                    "-22343210",
                ],
            ),
            (
                18,
                &[
                    "+11122221",
                    "+11222211",
                    "+11232111",
                    "+11232210",
                    "+12232110",
                    "-12243321",
                    "-12343221",
                    "-22343211",
                ],
            ),
            (
                19,
                &[
                    "+01122221",
                    "+11122211",
                    "+11222111",
                    "+11222210",
                    "+11232110",
                    "+12232100",
                    "-12244321",
                    "-12343321",
                    "-22343221",
                ],
            ),
            (
                20,
                &[
                    "+01122211",
                    "+11122111",
                    "+11122210",
                    "+11221111",
                    "+11222110",
                    "+11232100",
                    "-12344321",
                    "-22343321",
                ],
            ),
            (
                21,
                &[
                    "+01122111",
                    "+01122210",
                    "+11121111",
                    "+11122110",
                    "+11221110",
                    "+11222100",
                    "-12354321",
                    "-22344321",
                ],
            ),
            (
                22,
                &[
                    "+01121111",
                    "+01122110",
                    "+11111111",
                    "+11121110",
                    "+11122100",
                    "+11221100",
                    "-13354321",
                    "-22354321",
                ],
            ),
            (
                23,
                &[
                    "+01111111",
                    "+01121110",
                    "+01122100",
                    "+10111111",
                    "+11111110",
                    "+11121100",
                    "+11221000",
                    "-22454321",
                    "-23354321",
                ],
            ),
            (
                24,
                &[
                    "+00111111",
                    "+01011111",
                    "+01111110",
                    "+01121100",
                    "+10111110",
                    "+11111100",
                    "+11121000",
                    "-23454321",
                ],
            ),
            (
                25,
                &[
                    "+00011111",
                    "+00111110",
                    "+01011110",
                    "+01111100",
                    "+01121000",
                    "+10111100",
                    "+11111000",
                    "-23464321",
                ],
            ),
            (
                26,
                &[
                    "+00001111",
                    "+00011110",
                    "+00111100",
                    "+01011100",
                    "+01111000",
                    "+10111000",
                    "+11110000",
                    "-23465321",
                ],
            ),
            (
                27,
                &[
                    "+00000111",
                    "+00001110",
                    "+00011100",
                    "+00111000",
                    "+01011000",
                    "+01110000",
                    "+10110000",
                    "-23465421",
                ],
            ),
            (
                28,
                &[
                    "+00000011",
                    "+00000110",
                    "+00001100",
                    "+00011000",
                    "+00110000",
                    "+01010000",
                    "+10100000",
                    "-23465431",
                ],
            ),
            (
                29,
                &[
                    "+00000001",
                    "+00000010",
                    "+00000100",
                    "+00001000",
                    "+00010000",
                    "+00100000",
                    "+01000000",
                    "+10000000",
                    "-23465432",
                ],
            ),
        ],
    ),
];

/// Published difference matrices: `(type, order, row-major entries)`.
pub const MATRICES: [(AffineType, &[&str], &[i32]); 3] = [
    (
        AffineType::D4_3,
        &["phi", "+21", "+11", "+10", "r1", "-10", "-11", "-21"],
        &[
            0, 1, 2, 3, 4, 5, 6, 7, 7, 8, 5, 6, 3, 4, 5, 6, 6, 7, 8, 5, 6, 7, 4, 5, 5, 6, 7, 8, 5,
            6, 7, 4, 4, 5, 6, 7, 4, 5, 6, 3, 3, 4, 5, 6, 7, 8, 5, 6, 2, 3, 4, 5, 6, 7, 8, 5, 1, 2,
            3, 4, 5, 6, 7, 8,
        ],
    ),
    (
        AffineType::G2_1,
        &[
            "phi", "+23", "+13", "+12", "+11", "+10", "+01", "r1", "r2", "-01", "-10", "-11",
            "-12", "-13", "-23",
        ],
        &[
            0, 1, 2, 3, 4, 5, 5, 6, 6, 7, 7, 8, 9, 10, 11, 11, 12, 7, 8, 9, 10, 4, 5, 5, 6, 6, 7,
            8, 9, 10, 10, 11, 12, 7, 8, 9, 9, 10, 4, 5, 11, 6, 7, 8, 9, 9, 10, 11, 6, 7, 8, 8, 9,
            3, 4, 10, 5, 6, 7, 8, 8, 9, 10, 5, 6, 7, 7, 8, 2, 3, 9, 4, 5, 6, 7, 7, 8, 9, 10, 11,
            12, 6, 7, 7, 8, 8, 9, 10, 11, 6, 7, 8, 9, 4, 5, 6, 6, 7, 1, 2, 8, 3, 4, 5, 6, 6, 7, 8,
            9, 10, 11, 5, 6, 6, 7, 7, 8, 9, 10, 5, 6, 7, 8, 3, 4, 5, 5, 6, 0, 1, 7, 2, 3, 4, 5, 5,
            6, 7, 8, 9, 10, 4, 5, 5, 6, 6, 7, 8, 9, 4, 5, 6, 7, 8, 9, 10, 10, 11, 5, 6, 12, 7, 8,
            9, 10, 4, 5, 6, 7, 8, 9, 9, 10, 4, 5, 11, 6, 7, 8, 9, 3, 4, 5, 6, 7, 8, 8, 9, 3, 4, 10,
            5, 6, 7, 8, 2, 3, 4, 5, 6, 7, 7, 8, 8, 9, 9, 10, 11, 12, 7, 1, 2, 3, 4, 5, 6, 6, 7, 7,
            8, 8, 9, 10, 11, 12,
        ],
    ),
    (
        AffineType::E6_2,
        &[
            "phi", "+2321", "+1321", "+1221", "+1211", "+1210", "+1111", "+1110", "+1100", "+1000",
            "+0111", "+0110", "+0100", "r1", "r2", "-0100", "-0110", "-0111", "-1000", "-1100",
            "-1110", "-1111", "-1210", "-1211", "-1221", "-1321", "-2321",
        ],
        &[
            0, 1, 2, 3, 4, 5, 5, 6, 7, 8, 6, 7, 8, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15,
            16, 17, 17, 18, 10, 11, 12, 13, 13, 14, 15, 16, 5, 6, 7, 8, 8, 9, 10, 11, 9, 10, 11,
            12, 12, 13, 14, 15, 16, 16, 17, 18, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 16, 7, 8,
            9, 10, 17, 9, 10, 11, 11, 12, 13, 14, 15, 15, 16, 17, 18, 10, 11, 11, 12, 13, 14, 12,
            13, 14, 15, 15, 16, 8, 9, 16, 17, 9, 10, 10, 11, 12, 13, 14, 14, 15, 16, 17, 18, 10,
            10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 8, 15, 16, 17, 9, 9, 10, 11, 12, 13, 13,
            14, 15, 16, 17, 18, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 16, 14, 15, 16, 17, 8,
            9, 10, 11, 12, 13, 14, 15, 16, 17, 9, 18, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 7,
            14, 15, 16, 8, 17, 9, 10, 11, 12, 12, 13, 14, 15, 16, 17, 17, 18, 10, 11, 9, 10, 11,
            12, 12, 13, 14, 15, 13, 14, 15, 16, 16, 17, 9, 10, 11, 11, 12, 13, 14, 15, 16, 16, 17,
            18, 10, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 17, 9, 10, 10, 11, 12,
            13, 14, 15, 15, 16, 17, 18, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16,
            17, 9, 12, 13, 14, 15, 16, 8, 17, 9, 10, 11, 18, 10, 11, 12, 12, 13, 14, 6, 13, 14, 15,
            7, 16, 8, 9, 10, 11, 11, 12, 13, 14, 15, 16, 16, 17, 9, 10, 17, 18, 10, 11, 11, 12, 13,
            14, 12, 13, 14, 15, 15, 16, 8, 9, 10, 10, 11, 12, 13, 14, 15, 15, 16, 17, 9, 16, 17,
            18, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 8, 9, 9, 10, 11, 12, 13, 14, 14,
            15, 16, 17, 6, 7, 8, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 16, 8, 9, 10, 11,
            12, 13, 14, 14, 15, 16, 8, 15, 16, 17, 9, 9, 10, 11, 12, 10, 11, 12, 13, 13, 14, 15, 7,
            8, 8, 9, 10, 11, 12, 13, 13, 14, 15, 16, 14, 15, 16, 8, 17, 18, 10, 11, 9, 10, 11, 12,
            12, 13, 14, 15, 7, 7, 8, 9, 10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 7, 16, 17, 18, 10,
            8, 9, 10, 11, 11, 12, 13, 14, 6, 6, 7, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 6, 15,
            16, 17, 18, 7, 8, 9, 10, 10, 11, 12, 13, 5, 8, 9, 10, 11, 12, 13, 13, 14, 15, 16, 14,
            15, 16, 17, 8, 9, 10, 11, 18, 10, 11, 12, 12, 13, 14, 15, 16, 7, 8, 9, 10, 11, 12, 12,
            13, 14, 15, 13, 14, 15, 16, 16, 17, 9, 10, 17, 18, 10, 11, 11, 12, 13, 14, 15, 6, 7, 8,
            9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 17, 9, 16, 17, 18, 10, 10, 11, 12,
            13, 14, 5, 6, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 17, 15, 16, 17,
            18, 9, 10, 11, 12, 13, 5, 6, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16,
            8, 15, 16, 17, 9, 18, 10, 11, 12, 13, 4, 5, 6, 7, 8, 9, 9, 10, 11, 12, 10, 11, 12, 13,
            13, 14, 15, 16, 14, 15, 16, 17, 17, 18, 10, 11, 12, 3, 4, 5, 6, 7, 8, 8, 9, 10, 11, 9,
            10, 11, 12, 12, 13, 14, 15, 13, 14, 15, 16, 16, 17, 18, 10, 11, 2, 3, 4, 5, 6, 7, 7, 8,
            9, 10, 8, 9, 10, 11, 11, 12, 13, 14, 12, 13, 14, 15, 15, 16, 17, 18, 10, 1, 2, 3, 4, 5,
            6, 6, 7, 8, 9, 7, 8, 9, 10, 10, 11, 12, 13, 11, 12, 13, 14, 14, 15, 16, 17, 18,
        ],
    ),
];
