//! Matrices and tables as printed, transcribed for comparison.

pub const PRINTED_N1: [[i64; 12]; 7] = [
    [0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, -1, -1, 1, 0, -1, 1, 1, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0, 1, 0, 1, 0, 0],
    [1, 0, 1, 1, -1, 0, 1, -1, 0, 0, 1, 0],
    [0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1],
];

pub const PRINTED_N2: [[i64; 12]; 7] = [
    [0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1],
    [0, 0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0],
    [0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0],
    [0, 0, 1, 0, 0, -1, 1, -1, -1, 0, 0, 0],
];

pub const FIG2: [[usize; 15]; 4] = [
    [1, 6, 14, 15, 14, 35, 20, 21, 21, 35, 15, 14, 14, 6, 1],
    [12, 71, 162, 173, 157, 394, 225, 231, 233, 385, 166, 153, 152, 66, 11],
    [12, 71, 162, 173, 158, 396, 226, 234, 235, 390, 168, 155, 155, 67, 11],
    [0, 0, 0, 0, 1, 2, 1, 3, 2, 5, 2, 2, 3, 1, 0],
];

pub const FIG3: [[usize; 15]; 4] = [
    [1, 6, 14, 15, 14, 35, 20, 21, 21, 35, 15, 14, 14, 6, 1],
    [12, 68, 156, 168, 155, 388, 222, 232, 232, 388, 168, 155, 156, 68, 12],
    [12, 68, 157, 169, 156, 391, 224, 234, 234, 391, 169, 156, 157, 68, 12],
    [0, 0, 1, 1, 1, 3, 2, 2, 2, 3, 1, 1, 1, 0, 0],
];

/// Printed relation matrix, columns in basis order (translators first).
pub const PRINTED_LEFT: [[i64; 12]; 18] = [
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1],
    [0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0],
    [0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0],
    [-1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1],
];

/// Printed RCF.
pub const PRINTED_RIGHT: [[i64; 12]; 7] = [
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, -1],
    [0, 1, 0, 0, 0, -1, 0, 0, 1, -1, 0, 1],
    [0, 0, 1, 0, 0, -1, 0, 0, 0, -1, -1, 1],
    [0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, -1, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1],
];

pub const PRINTED_RULES: [&str; 7] = [
    "<x,y,z> -> -<z,y,x> - [y,x,z] + [z,y,x]",
    "<x,z,y> -> <z,x,y> - <z,y,x> - [y,x,z] - [z,x,y]",
    "<y,x,z> -> -<z,x,y> + [y,x,z] + [z,x,y]",
    "<y,z,x> -> -<z,x,y> + <z,y,x> + [y,x,z] - [z,y,x]",
    "[x,y,z] -> -[y,x,z]",
    "[x,z,y] -> -[z,x,y]",
    "[y,z,x] -> -[z,y,x]",
];

pub const GC: [&str; 24] = [
    "ba^2 - aba", "bab - ab^2", "bac - abc + a", "bad - abd + b", "ca^2 - aca - c", "cab - acb - d",
    "cac - ac^2", "cad - acd", "cba - bca + a", "cb^2 - bcb + b", "cbc - bc^2 - c", "cbd - bcd - d",
    "da^2 - ada", "dab - adb", "dac - adc", "dad - ad^2", "dba - bda", "db^2 - bdb",
    "dbc - bdc + a", "dbd - bd^2 + b", "dca - cda - c", "dcb - cdb - d", "dc^2 - cdc", "dcd - cd^2",
];

// "bbd" and "bcc" as printed are b^2d and bc^2.
pub const GT: [&str; 40] = [
    "aba - a^2b + b", "aca - a^2c", "ada - a^2d", "ba^2 - a^2b + b", "bab - ab^2",
    "bac - acb", "bad - adb", "b^2a - ab^2", "bca - abc", "bcb - b^2c - b",
    "bda - abd + b", "bdb - b^2d", "ca^2 - a^2c - c", "cab - abc - d + a", "cac - ac^2",
    "cad - adc", "cba - acb", "cb^2 - b^2c", "cbc - bc^2 - c", "cbd - bdc - d + a",
    "c^2a - ac^2", "c^2b - bc^2", "cda - acd", "cdb - bcd", "cdc - c^2d",
    "da^2 - a^2d", "dab - abd + b", "dac - acd", "dad - ad^2", "dba - adb",
    "db^2 - b^2d", "dbc - bcd", "dbd - bd^2 + b", "dca - adc - c", "dcb - bdc - d + a",
    "dc^2 - c^2d", "dcd - cd^2", "d^2a - ad^2", "d^2b - bd^2 + b", "d^2c - cd^2 - c",
];

pub const GCT: [&str; 44] = [
    "aba - a^2b + b", "aca - a^2c", "acb - abc + a", "ada - a^2d", "adb - abd + b",
    "adc - acd", "ba^2 - a^2b + b", "bab - ab^2", "bac - abc + a", "bad - abd + b",
    "b^2a - ab^2", "bca - abc", "bcb - b^2c - b", "bda - abd + b", "bdb - b^2d",
    "bdc - bcd - a", "ca^2 - a^2c - c", "cab - abc - d + a", "cac - ac^2", "cad - acd",
    "cba - abc + a", "cb^2 - b^2c", "cbc - bc^2 - c", "cbd - bcd - d", "c^2a - ac^2",
    "c^2b - bc^2", "cda - acd", "cdb - bcd", "cdc - c^2d", "da^2 - a^2d",
    "dab - abd + b", "dac - acd", "dad - ad^2", "dba - abd + b", "db^2 - b^2d",
    "dbc - bcd", "dbd - bd^2 + b", "dca - acd - c", "dcb - bcd - d", "dc^2 - c^2d",
    "dcd - cd^2", "d^2a - ad^2", "d^2b - bd^2 + b", "d^2c - cd^2 - c",
];

pub const GB_C: [&str; 16] = [
    "ac", "ad", "ba", "b^2", "bc - a^2", "bd - ab", "c^2", "cd", "da", "db", "dc - ca", "d^2 - cb",
    "a^3 - a", "a^2b - b", "ca^2 - c", "cab - d",
];

pub const GB_T: [&str; 16] = [
    "ac", "ba", "b^2", "bc + ad - a^2", "bd - ab", "c^2", "cd", "da - ad", "db", "dc - ca",
    "d^2 - cb - ad", "a^2b - b", "ca^2 - c", "cab + a^2d - a^3 - d + a", "cad",
    "a^3d - a^4 - ad + a^2",
];
