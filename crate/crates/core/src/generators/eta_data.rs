//! Printed blocks of the nilpotent generator, one digit string per row.
//! One row of block (7, 2) has a single missing entry; see `calibrate_eta`.

pub(crate) const ETA_BLOCKS: [(usize, usize, &[&str]); 16] = [
    (1, 16, &["0004300", "0000020", "3100000", "2440000", "3040000", "1140011", "1210004", "4410011", "4340004"]),
    (2, 13, &["2103140", "4204330", "0312024", "4222103", "0242031", "1332102"]),
    (3, 7, &["3403140", "4201220", "3444204", "2042344", "3012311", "0434043"]),
    (4, 10, &["0002430", "0003130", "4343400", "2301200", "2232300", "2421300"]),
    (5, 6, &["4202230", "4240232", "3131132", "2400244", "1024000", "4042303", "3001441"]),
    (6, 14, &["1243014", "0102044", "1440022", "1131212", "2213324", "2040010", "3041044"]),
    (7, 2, &["14343", "312424", "120303", "004010", "424213", "242424", "433333"]),
    (8, 12, &["4313014", "0402044", "4110022", "1134343", "2212231", "2040040", "3044011"]),
    (9, 5, &["2121042", "0204002", "3331002", "2143131", "4232012", "4220020", "0113033"]),
    (10, 1, &["004411144", "001323322", "002203421", "000000000", "300000000", "040001111", "030000404"]),
    (11, 15, &["3431042", "0304002", "2221002", "2142424", "4233043", "4220030", "0112022"]),
    (12, 11, &["1300330", "1243313", "2132334", "2402204", "2322301", "4111333", "3441301"]),
    (13, 3, &["213242", "214121", "421044", "002202", "431241", "211434", "420110"]),
    (14, 9, &["4200330", "4313313", "3422334", "2403301", "2323204", "4114222", "3444204"]),
    (15, 8, &["1302230", "1310232", "2421132", "2400311", "1021000", "4043202", "3004114"]),
    (16, 4, &["000344", "000422", "002421", "001314", "142434", "440000", "330000"]),
];
