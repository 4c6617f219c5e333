#![allow(dead_code)]

/// `(n, |M_n|, |A_n|, distinct lengths, dimension, essential)` for `3 <= n <= 37`.
pub const TABLE: &[(usize, u64, u64, u64, usize, usize)] = &[
    (3, 1, 1, 1, 0, 0),
    (4, 4, 3, 3, 0, 0),
    (5, 5, 5, 5, 0, 0),
    (6, 21, 17, 17, 0, 0),
    (7, 28, 28, 28, 0, 0),
    (8, 120, 105, 105, 0, 0),
    (9, 165, 161, 161, 0, 0),
    (10, 715, 670, 670, 0, 0),
    (11, 1001, 1001, 1001, 0, 0),
    (12, 4368, 4129, 2869, 1, 1),
    (13, 6188, 6188, 6188, 0, 0),
    (14, 27132, 26565, 26565, 0, 0),
    (15, 38760, 38591, 14502, 2, 4),
    (16, 170544, 167898, 167898, 0, 0),
    (17, 245157, 245157, 245157, 0, 0),
    (18, 1081575, 1072730, 445507, 2, 3),
    (19, 1562275, 1562275, 1562275, 0, 0),
    (20, 6906900, 6871780, 6055315, 1, 1),
    (21, 10015005, 10011302, 2571120, 3, 7),
    (22, 44352165, 44247137, 44247137, 0, 0),
    (23, 64512240, 64512240, 64512240, 0, 0),
    (24, 286097760, 285599304, 65610820, 3, 6),
    (25, 417225900, 417219530, 362592230, 1, 1),
    (26, 1852482996, 1850988412, 1850988412, 0, 0),
    (27, 2707475148, 2707392498, 591652989, 3, 6),
    (28, 12033222880, 12026818454, 11453679146, 1, 1),
    (29, 17620076360, 17620076360, 17620076360, 0, 0),
    (30, 78378960360, 78356395953, 1511122441, 6, 65),
    (31, 114955808528, 114955808528, 114955808528, 0, 0),
    (32, 511738760544, 511647729284, 511647729284, 0, 0),
    (33, 751616304549, 751614362180, 67876359922, 5, 40),
    (34, 3348108992991, 3347789809236, 3347789809236, 0, 0),
    (35, 4923689695575, 4923688862065, 1882352047787, 4, 32),
    (36, 21945588357420, 21944254861680, 1404030562068, 5, 17),
    (37, 32308782859535, 32308782859535, 32308782859535, 0, 0),
];

/// `(n, |M_n|, |A_n|)` for `38 <= n <= 50`.
pub const TABLE_LARGE: &[(usize, u128, u128)] = &[
    (38, 144079707346575, 144074954225730),
    (39, 212327989773900, 212327943155328),
    (40, 947309492837400, 947290091984737),
    (41, 1397281501935165, 1397281501935165),
    (42, 6236646703759395, 6236574886430483),
    (43, 9206478467454345, 9206478467454345),
    (44, 41107996877935680, 41107708028136365),
    (45, 60727722660586800, 60727721456103761),
    (46, 271250494550621040, 271249413252489750),
    (47, 400978991944396320, 400978991944396320),
    (48, 1791608261879217600, 1791603906671596709),
    (49, 2650087220696342700, 2650087220630545150),
    (50, 11844267374132633700, 11844250906909678730),
];

/// Published generators of the identity spaces.
pub const GENERATORS: &[(usize, &[&[i64]])] = &[
    (12, &[&[1, -2, 1, 0, -1, 1]]),
    (15, &[&[1, 0, -1, -1, -1, 0, 2], &[0, 1, 0, -2, -1, 1, 1]]),
    (
        18,
        &[
            &[1, 0, -2, 0, 1, 0, -1, 0, 1],
            &[0, 1, -2, 1, 0, 0, 0, -1, 1],
        ],
    ),
    (20, &[&[1, -2, 1, 0, -1, 2, -1, 0, 1, -1]]),
    (
        21,
        &[
            &[1, 0, 0, -1, -2, 0, 1, 1, 1, -1],
            &[0, 1, 0, -1, -1, -1, 1, 2, 0, -1],
            &[0, 0, 1, 0, -2, -1, 1, 2, 1, -2],
        ],
    ),
    (
        24,
        &[
            &[1, 0, 0, -2, 0, 0, 1, 0, -1, 0, 0, 1],
            &[0, 1, 0, -2, 0, 1, 0, 0, 0, -1, 0, 1],
            &[0, 0, 1, -2, 1, 0, 0, 0, 0, 0, -1, 1],
        ],
    ),
    (25, &[&[1, -1, -1, 1, 0, -1, 1, 1, -1, 0, 1, -1]]),
    (
        27,
        &[
            &[1, 0, 0, -1, -1, 0, 0, 1, 0, -1, 0, 0, 1],
            &[0, 1, 0, -1, -1, 0, 1, 0, 0, 0, -1, 0, 1],
            &[0, 0, 1, -1, -1, 1, 0, 0, 0, 0, 0, -1, 1],
        ],
    ),
    (28, &[&[1, -2, 1, 0, -1, 2, -1, 0, 1, -2, 1, 0, -1, 1]]),
    (
        30,
        &[
            &[1, 0, 0, 0, 0, 0, -2, 0, -1, 0, -1, 0, 2, 0, 1],
            &[0, 1, 0, 0, 0, 0, -2, 1, -2, 0, 0, -1, 2, 0, 1],
            &[0, 0, 1, 0, 0, 0, -1, 0, -2, 0, 0, 0, 1, 0, 1],
            &[0, 0, 0, 1, 0, 0, 0, -2, 0, -1, 0, 1, 0, 1, 0],
            &[0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, -2, 2, -2, 1, 0, -1, 2, -2, 1],
        ],
    ),
    (
        33,
        &[
            &[1, 0, 0, 0, 0, -1, -2, -1, 1, 3, 1, -2, -2, -1, 1, 2],
            &[0, 1, 0, 0, 0, -1, -2, -1, 2, 2, 1, -1, -3, -1, 1, 2],
            &[0, 0, 1, 0, 0, -1, -2, 0, 1, 2, 1, -1, -2, -2, 1, 2],
            &[0, 0, 0, 1, 0, -1, -1, -1, 1, 2, 1, -1, -2, -1, 0, 2],
            &[0, 0, 0, 0, 1, 0, -2, -1, 1, 2, 1, -1, -2, -1, 1, 1],
        ],
    ),
    (
        35,
        &[
            &[1, 0, 0, 0, -1, -1, -1, -1, 0, 1, 2, 2, 1, 1, 0, -2, -2],
            &[0, 1, 0, 0, 0, -2, -1, 0, -1, 1, 2, 1, 2, 1, -1, -1, -2],
            &[0, 0, 1, 0, -1, 0, -1, -1, 1, 0, 0, 2, 1, 0, 0, -1, -1],
            &[0, 0, 0, 1, 0, -2, 0, 1, -1, 0, 1, 0, 1, 1, -1, -1, 0],
        ],
    ),
    (
        36,
        &[
            &[1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1],
            &[0, 0, 1, 0, 0, -2, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1],
            &[0, 0, 0, 1, 0, -2, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1],
            &[0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1],
        ],
    ),
];
