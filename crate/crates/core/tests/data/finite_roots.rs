// Generated golden data; do not edit by hand.

/// Finite positive roots `(tag, long, short)`; simply laced types list all
/// roots as long.
pub const FINITE_ROOTS: [(&str, &[&str], &[&str]); 7] = [
    ("G2_1", &["10", "13", "23"], &["01", "11", "12"]),
    ("D4_3", &["01", "31", "32"], &["10", "11", "21"]),
    ("F4_1", &["1000", "0100", "1100", "0120", "1120", "1220", "0122", "1122", "1222", "1242", "1342", "2342"], &["0010", "0110", "1110", "1232", "0001", "0011", "0111", "0121", "1111", "1121", "1221", "1231"]),
    ("E6_2", &["0001", "0010", "0011", "0210", "0211", "0221", "2210", "2211", "2221", "2421", "2431", "2432"], &["0100", "0110", "0111", "2321", "1000", "1100", "1110", "1210", "1111", "1211", "1221", "1321"]),
    ("E6_1", &["100000", "010000", "001000", "000100", "000010", "000001", "101000", "010100", "001100", "000110", "000011", "101100", "011100", "010110", "001110", "000111", "111100", "101110", "011110", "010111", "001111", "111110", "101111", "011210", "011111", "111210", "111111", "011211", "112210", "111211", "011221", "112211", "111221", "112221", "112321", "122321"], &[]),
    ("E7_1", &["1000000", "0100000", "0010000", "0001000", "0000100", "0000010", "0000001", "1010000", "0101000", "0011000", "0001100", "0000110", "0000011", "1011000", "0111000", "0101100", "0011100", "0001110", "0000111", "1111000", "1011100", "0111100", "0101110", "0011110", "0001111", "1111100", "1011110", "0112100", "0111110", "0101111", "0011111", "1112100", "1111110", "1011111", "0112110", "0111111", "1122100", "1112110", "1111111", "0112210", "0112111", "1122110", "1112210", "1112111", "0112211", "1122210", "1122111", "1112211", "0112221", "1123210", "1122211", "1112221", "1223210", "1123211", "1122221", "1223211", "1123221", "1223221", "1123321", "1223321", "1224321", "1234321", "2234321"], &[]),
    ("E8_1", &["10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010", "00000001", "10100000", "01010000", "00110000", "00011000", "00001100", "00000110", "00000011", "10110000", "01110000", "01011000", "00111000", "00011100", "00001110", "00000111", "11110000", "10111000", "01111000", "01011100", "00111100", "00011110", "00001111", "11111000", "10111100", "01121000", "01111100", "01011110", "00111110", "00011111", "11121000", "11111100", "10111110", "01121100", "01111110", "01011111", "00111111", "11221000", "11121100", "11111110", "10111111", "01122100", "01121110", "01111111", "11221100", "11122100", "11121110", "11111111", "01122110", "01121111", "11222100", "11221110", "11122110", "11121111", "01122210", "01122111", "11232100", "11222110", "11221111", "11122210", "11122111", "01122211", "12232100", "11232110", "11222210", "11222111", "11122211", "01122221", "12232110", "11232210", "11232111", "11222211", "11122221", "12232210", "12232111", "11233210", "11232211", "11222221", "12233210", "12232211", "11233211", "11232221", "12243210", "12233211", "12232221", "11233221", "12343210", "12243211", "12233221", "11233321", "22343210", "12343211", "12243221", "12233321", "22343211", "12343221", "12243321", "22343221", "12343321", "12244321", "22343321", "12344321", "22344321", "12354321", "22354321", "13354321", "23354321", "22454321", "23454321", "23464321", "23465321", "23465421", "23465431", "23465432"], &[]),
];
