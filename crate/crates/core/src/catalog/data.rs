use super::Naming::{ByDirection as Dir, ByGenerator as Gen};
use super::{FamilyDef, SubalgebraDef};

macro_rules! sub {
    ($alg:literal, $id:literal, [$($p:literal),*], $cond:literal, [$($b:literal),* $(,)?]) => {
        sub!($alg, $id, [$($p),*], $cond, [$($b),*], "")
    };
    ($alg:literal, $id:literal, [$($p:literal),*], $cond:literal, [$($b:literal),* $(,)?], $note:literal) => {
        SubalgebraDef { algebra: $alg, id: $id, params: &[$($p),*], conditions: $cond, basis: &[$($b),*], note: $note }
    };
}

macro_rules! fam {
    ($alg:literal, $id:literal, $region:literal, $sym:literal, [$($f:literal),*], [$($d:literal),*], $naming:expr) => {
        fam!($alg, $id, $region, $sym, [$($f),*], [$($d),*], $naming, "")
    };
    ($alg:literal, $id:literal, $region:literal, $sym:literal, [$($f:literal),*], [$($d:literal),*], $naming:expr, $note:literal) => {
        FamilyDef {
            algebra: $alg,
            subalgebra: $id,
            region: $region,
            symbol: $sym,
            fixed: &[$($f),*],
            directions: &[$($d),*],
            naming: $naming,
            note: $note,
        }
    };
}

pub static SUBALGEBRAS: &[SubalgebraDef] = &[
    // sl2(C), realified
    sub!("sl2C", "h1", [], "", ["e1", "e2 + e3"]),
    sub!("sl2C", "h2", [], "", ["ie2 + ie3", "e2 + e3"]),
    sub!("sl2C", "h3", [], "", ["e3", "ie3"]),
    sub!("sl2C", "h4", [], "", ["e1"]),
    sub!("sl2C", "h5", [], "", ["e2 + e3"]),
    sub!("sl2C", "h6", [], "", ["e3"]),
    // sl3(R), dimension 4
    sub!("sl3R", "h1", ["c"], "", ["e1", "e2", "e6", "e5 + c*e8"]),
    sub!("sl3R", "h2", [], "", ["e3", "e5", "e6", "e8"]),
    sub!("sl3R", "h3", [], "", ["e1", "e2", "e6", "e8"]),
    sub!("sl3R", "h4", [], "", ["e2", "e5", "e6", "e8"]),
    sub!("sl3R", "h5", [], "", ["e5", "e6", "e7", "e8"]),
    // dimension 3
    sub!("sl3R", "h6", [], "", ["e1 - e3", "e2 - e4", "e7 - e6"]),
    sub!("sl3R", "h7", [], "", ["e1 + e3", "e2 + e4", "e6 - e7"]),
    sub!("sl3R", "h8", [], "", ["e5 - e8", "e6", "e7"]),
    sub!("sl3R", "h9", ["a"], "a >= 0", ["a*(e5 + e8) + e6 - e7", "e1", "e2"]),
    sub!("sl3R", "h10", [], "", ["e5 - e8", "e2 + e3", "e6"]),
    sub!("sl3R", "h11", [], "", ["e3", "e6", "e8 + e2"]),
    sub!("sl3R", "h12", [], "", ["e2", "e6", "e5 + e8 - e3"]),
    sub!("sl3R", "h13", [], "", ["e1", "e2", "e6"]),
    sub!("sl3R", "h14", [], "", ["e5", "e8", "e6"]),
    sub!("sl3R", "h15", [], "", ["e2", "e5 + e8", "e6"]),
    sub!("sl3R", "h16", [], "", ["e3", "e6", "e8"]),
    sub!("sl3R", "h17", ["b"], "", ["e2", "e6", "(b - 1)*e5 + b*e8"], "printed with a trailing comma"),
    sub!("sl3R", "h18", ["c"], "", ["e3", "e6", "e5 + c*e8"]),
    // dimension 2
    sub!("sl3R", "h19", [], "", ["e6", "e2 + e3"]),
    sub!("sl3R", "h20", [], "", ["e6", "e2 + e8"]),
    sub!("sl3R", "h21", [], "", ["e3", "e6 + e5"]),
    sub!("sl3R", "h22", ["a"], "a notin {0, 1}", ["e3", "e5 + a*e8"]),
    sub!("sl3R", "h23", [], "", ["e5", "e6"]),
    sub!("sl3R", "h24", [], "", ["e2", "e6"]),
    sub!("sl3R", "h25", [], "", ["e6", "e3"]),
    sub!("sl3R", "h26", [], "", ["e5", "e8"]),
    sub!("sl3R", "h27", [], "", ["e6", "e5 + e8"]),
    sub!("sl3R", "h28", [], "", ["e6", "e8"]),
    sub!("sl3R", "h29", [], "", ["e5 - e8", "e2 + e3"]),
    sub!("sl3R", "h30", [], "", ["e5 + e8", "e6 - e7"]),
    // dimension 1
    sub!("sl3R", "h31", ["a"], "a != 0", ["e5 + a*e8"]),
    sub!("sl3R", "h32", [], "", ["e2 + e8"]),
    sub!("sl3R", "h33", [], "", ["e2 + e3"]),
    sub!("sl3R", "h34", [], "", ["e6"]),
    sub!("sl3R", "h35", ["b"], "b >= 0", ["e6 - e7 + b*(e5 + e8)"]),
    // su(2,1), dimension 4
    sub!("su21", "h1", [], "", ["e1", "e2", "e3", "e6"]),
    sub!("su21", "h2", [], "", ["e4 - e3", "e2 + e5", "e6 + e7", "e8"]),
    sub!("su21", "h3", ["a"], "", ["e1 - 1/2*e6 + a*e8", "e4 - e3", "e2 + e5", "e6 + e7"], "no side condition on a"),
    sub!("su21", "h4", [], "", ["e1", "e6", "e7", "e8"]),
    // dimension 3
    sub!("su21", "h5", [], "", ["e1", "e2", "e3"]),
    sub!("su21", "h6", [], "", ["e2", "e4", "e7"]),
    sub!("su21", "h7", [], "", ["e6", "e7", "e8"]),
    sub!("su21", "h8", [], "", ["e5 + e2", "e6 + e7", "e8"]),
    sub!("su21", "h9", ["b"], "", ["e4 - e3 + b*e8", "e5 + e2", "e6 + e7"]),
    sub!("su21", "h10", ["b", "c"], "", ["e4 - e3 + b*(e5 + e2)", "e6 + e7", "e8 + c*(e5 + e2)"]),
    sub!(
        "su21",
        "h11",
        ["b", "c"],
        "",
        ["e1 - 1/2*e6 + 3/2*c*(e4 - e3) - 3/2*b*(e5 + e2)", "e8 + b*(e4 - e3) + c*(e5 + e2)", "e6 + e7"]
    ),
    // dimension 2
    sub!("su21", "h12", [], "", ["e1", "e6"]),
    sub!("su21", "h13", [], "", ["e4 - e3", "e6 + e7"]),
    sub!("su21", "h14", ["b"], "", ["e5 + e2 + b*(e4 - e3)", "e6 + e7"]),
    sub!("su21", "h15", ["b"], "", ["e4 - e3", "e8 + b*(e6 + e7)"]),
    sub!("su21", "h16", ["b", "c"], "", ["e5 + e2 + b*(e4 - e3)", "e8 + c*(e6 + e7)"]),
    sub!("su21", "h17", ["b", "c"], "", ["e6 + e7", "e8 + b*(e4 - e3) + c*(e5 + e2)"]),
    sub!(
        "su21",
        "h18",
        ["a", "b", "c", "d"],
        "b*c - a*d = 1/2",
        ["e6 + e7 + a*(e4 - e3) + b*(e5 + e2)", "e8 + c*(e4 - e3) + d*(e5 + e2)"]
    ),
    sub!("su21", "h19", ["a", "b", "c"], "", ["e1 - 1/2*e6 + a*e8 + b*(e4 - e3) + c*(e5 + e2)", "e6 + e7"]),
    sub!(
        "su21",
        "h20",
        ["a", "b", "c"],
        "",
        [
            "e1 - 1/2*e6 + 3/2*a*(e4 - e3) - 3/2*b*(e5 + e2) - 3*(a^2 + b^2)/2*(e6 + e7)",
            "e8 + b*(e4 - e3) + a*(e5 + e2) + c*(e6 + e7)"
        ]
    ),
    // dimension 1
    sub!("su21", "h21", ["a"], "", ["e1 + a*e6"]),
    sub!("su21", "h22", [], "", ["e6"]),
    sub!("su21", "h23", [], "", ["e8"]),
    sub!("su21", "h24", ["c"], "", ["e6 + e7 + c*e8"]),
    sub!("su21", "h25", ["b", "c"], "", ["e5 + e2 + b*(e6 + e7) + c*e8"]),
    sub!("su21", "h26", ["a", "b", "c"], "", ["e4 - e3 + a*(e5 + e2) + b*(e6 + e7) + c*e8"]),
    sub!("su21", "h27", ["a", "b", "c", "d"], "", ["e1 - 1/2*e6 + d*(e4 - e3) + a*(e5 + e2) + b*(e6 + e7) + c*e8"]),
    // sl2 ⊕ g2, x_i = (e_i, 0), y_i = (0, ε e_i) for i < 3, y3 = (0, e3)
    sub!("sl2xg2", "h1", [], "", ["x3", "y3"]),
    sub!("sl2xg2", "h2", [], "", ["x3", "y2 + y3"]),
    sub!("sl2xg2", "h3", [], "", ["x3", "y1"]),
    sub!("sl2xg2", "h4", [], "", ["x1", "y1"]),
    sub!("sl2xg2", "h5", [], "", ["x1", "y2 + y3"]),
    sub!("sl2xg2", "h6", [], "", ["x2 + x3", "y2 + y3"]),
    sub!("sl2xg2", "h7", [], "", ["x1", "x2 + x3"]),
    sub!("sl2xg2", "h8", [], "", ["x3"]),
    sub!("sl2xg2", "h9", [], "", ["x1"]),
    sub!("sl2xg2", "h10", [], "", ["x2 + x3"]),
    sub!("sl2xg2", "h11", [], "", ["x1 + y1", "x2 + x3 + y2 + y3"]),
    sub!("sl2xg2", "h12k1", [], "", ["x1 + y1", "x2 + x3"], "k = e1"),
    sub!("sl2xg2", "h12k2", [], "", ["x1 + y2 + y3", "x2 + x3"], "k = e2 + e3"),
    sub!("sl2xg2", "h12k3", [], "", ["x1 + y3", "x2 + x3"], "k = e3"),
    sub!("sl2xg2", "h13", [], "", ["x1 + y1"]),
    sub!("sl2xg2", "h14", [], "", ["x1 + y2 + y3"]),
    sub!("sl2xg2", "h15", [], "", ["x2 + x3 + y2 + y3"]),
    sub!("sl2xg2", "h16", [], "", ["x1 + y3"]),
    sub!("sl2xg2", "h17", [], "", ["x2 + x3 + y3"]),
    sub!("sl2xg2", "h18", [], "", ["x3 + y3"]),
];

const ABCD: &[&str] = &["a", "b", "c", "d"];
const ABCDF: &[&str] = &["a", "b", "c", "d", "f"];

pub static FAMILIES: &[FamilyDef] = &[
    fam!("sl2C", "h1", "", "X", ["e2", "ie1", "ie2", "ie3"], ["e1", "e2 + e3"], Dir(&["a", "b"])),
    fam!("sl2C", "h2", "", "Y", ["e1", "e2", "ie1", "ie2"], ["e2 + e3", "ie2 + ie3"], Dir(&["a", "b"])),
    fam!("sl2C", "h3", "", "Z", ["e1", "e2", "ie1", "ie2"], ["e3", "ie3"], Dir(&["a", "b"])),
    fam!("sl2C", "h4", "", "W", ["e2", "e3", "ie1", "ie2", "ie3"], [], Dir(&["a"])),
    fam!("sl2C", "h5", "", "V", ["e1", "e2", "ie1", "ie2", "ie3"], [], Dir(&["a"])),
    fam!("sl2C", "h6", "", "U", ["e1", "e2", "ie1", "ie2", "ie3"], [], Dir(&["a"])),
    fam!("sl3R", "h1", "", "X", ["e3", "e4", "e7", "e8"], ["e1", "e2", "e5 + c*e8", "e6"], Gen(ABCD)),
    fam!("sl3R", "h2", "", "X", ["e1", "e2", "e4", "e7"], ["e3", "e5", "e6", "e8"], Gen(ABCD)),
    fam!("sl3R", "h3", "", "X", ["e3", "e4", "e5", "e7"], ["e1", "e2", "e6", "e8"], Gen(ABCD)),
    fam!("sl3R", "h4", "", "X", ["e1", "e3", "e4", "e7"], ["e2", "e5", "e6", "e8"], Gen(ABCD)),
    fam!("sl3R", "h5", "", "X", ["e1", "e2", "e3", "e4"], ["e5", "e6", "e7", "e8"], Gen(ABCD)),
    fam!("sl3R", "h6", "", "X", ["e3", "e4", "e5", "e6", "e8"], [], Gen(ABCDF)),
    fam!("sl3R", "h7", "", "X", ["e3", "e4", "e5", "e6", "e8"], [], Gen(ABCDF)),
    fam!("sl3R", "h8", "", "X", ["e1", "e2", "e3", "e4", "e5"], [], Gen(ABCDF)),
    fam!("sl3R", "h9", "", "X", ["e3", "e4", "e5", "e6", "e8"], ["e1", "e2", "e6 - e7 + a*(e5 + e8)"], Gen(ABCDF)),
    fam!("sl3R", "h10", "", "X", ["e1", "e2", "e4", "e5", "e7"], ["e2 + e3", "e5 - e8", "e6"], Gen(ABCDF)),
    fam!("sl3R", "h11", "", "X", ["e1", "e2", "e4", "e5", "e7"], ["e2 + e8", "e3", "e6"], Gen(ABCDF)),
    fam!("sl3R", "h12", "", "X", ["e1", "e3", "e4", "e7", "e8"], [], Gen(ABCDF)),
    fam!("sl3R", "h13", "", "X", ["e3", "e4", "e5", "e7", "e8"], [], Gen(ABCDF)),
    fam!("sl3R", "h14", "", "X", ["e1", "e2", "e3", "e4", "e7"], ["e5", "e6", "e8"], Gen(ABCDF)),
    fam!("sl3R", "h15", "", "X", ["e1", "e3", "e4", "e5", "e7"], [], Gen(ABCDF)),
    fam!("sl3R", "h16", "", "X", ["e1", "e2", "e4", "e5", "e7"], [], Gen(ABCDF)),
    fam!("sl3R", "h17", "b != 0", "X", ["e1", "e3", "e4", "e5", "e7"], [], Gen(ABCDF)),
    fam!("sl3R", "h17", "b = 0", "Y", ["e1", "e3", "e4", "e7", "e8"], [], Gen(ABCDF)),
    fam!("sl3R", "h18", "", "X", ["e1", "e2", "e4", "e7", "e8"], ["e3", "e5 + c*e8", "e6"], Gen(ABCDF)),
    fam!("sl3R", "h19", "", "X", ["e1", "e2", "e4", "e5", "e7", "e8"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h20", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h21", "", "X", ["e1", "e2", "e4", "e5", "e7", "e8"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h22", "", "X", ["e1", "e2", "e4", "e6", "e7", "e8"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h23", "", "X", ["e1", "e2", "e3", "e4", "e7", "e8"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h24", "", "X", ["e1", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h25", "", "X", ["e1", "e2", "e4", "e5", "e7", "e8"], ["e3", "e6"], Dir(&["b", "c"])),
    fam!("sl3R", "h26", "", "X", ["e1", "e2", "e3", "e4", "e6", "e7"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h27", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h28", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h29", "", "X", ["e1", "e2", "e4", "e5", "e6", "e7"], ["e2 + e3", "e5 - e8"], Dir(&["b", "c"])),
    fam!("sl3R", "h30", "", "X", ["e1", "e2", "e3", "e4", "e5", "e6"], [], Dir(&["b", "c"])),
    fam!("sl3R", "h31", "", "X", ["e1", "e2", "e3", "e4", "e6", "e7", "e8"], [], Dir(&["a"])),
    fam!("sl3R", "h32", "", "X", ["e1", "e3", "e4", "e5", "e6", "e7", "e8"], [], Dir(&["a"])),
    fam!("sl3R", "h33", "", "X", ["e1", "e3", "e4", "e5", "e6", "e7", "e8"], [], Dir(&["a"])),
    fam!("sl3R", "h34", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["a"])),
    fam!("sl3R", "h35", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["a"])),
    fam!("su21", "h1", "", "X", ["e4", "e5", "e7", "e8"], [], Dir(ABCD)),
    fam!("su21", "h2", "", "X", ["e1", "e2", "e3", "e6"], [], Dir(ABCD)),
    fam!("su21", "h3", "", "X", ["e3", "e5", "e7", "e8"], [], Dir(ABCD)),
    fam!("su21", "h4", "", "X", ["e2", "e3", "e4", "e5"], [], Dir(ABCD), "printed `c4 e6` read as `c4 e7`"),
    fam!("su21", "h5", "", "X", ["e4", "e5", "e6", "e7", "e8"], [], Dir(&["a", "b", "c"])),
    fam!("su21", "h6", "", "X", ["e1", "e3", "e5", "e6", "e8"], [], Dir(&["a", "b", "c"])),
    fam!("su21", "h7", "", "X", ["e1", "e2", "e3", "e4", "e5"], [], Dir(&["a", "b", "c"])),
    fam!("su21", "h8", "", "X", ["e1", "e2", "e3", "e4", "e6"], ["e2 + e5", "e6 + e7", "e8"], Dir(&["a", "b", "c"])),
    fam!(
        "su21",
        "h9",
        "",
        "X",
        ["e1", "e2", "e3", "e6", "e8"],
        ["e2 + e5", "e6 + e7", "e4 - e3 + b*e8"],
        Dir(&["a", "b", "c"])
    ),
    fam!("su21", "h10", "", "X", ["e1", "e2", "e3", "e5", "e6"], [], Dir(&["a", "b", "c"])),
    fam!("su21", "h11", "", "X", ["e2", "e3", "e4", "e5", "e7"], [], Dir(&["a", "b", "c"])),
    fam!("su21", "h12", "", "X", ["e2", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["a", "b"])),
    fam!("su21", "h13", "", "X", ["e1", "e2", "e3", "e5", "e6", "e8"], [], Dir(&["a", "b"])),
    fam!("su21", "h14", "", "X", ["e1", "e2", "e3", "e4", "e6", "e8"], [], Dir(&["a", "b"])),
    fam!("su21", "h15", "", "X", ["e1", "e2", "e3", "e5", "e6", "e7"], [], Dir(&["a", "b"])),
    fam!(
        "su21",
        "h16",
        "",
        "X",
        ["e1", "e2", "e3", "e4", "e6", "e7"],
        [],
        Dir(&["a", "b"]),
        "printed with b in place of c in the last two generators"
    ),
    fam!("su21", "h17", "", "X", ["e1", "e2", "e3", "e4", "e5", "e6"], [], Dir(&["a", "b"])),
    fam!("su21", "h18", "", "X", ["e1", "e2", "e3", "e4", "e5", "e6"], [], Dir(&["a", "b"])),
    fam!("su21", "h19", "", "X", ["e2", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["a", "b"])),
    fam!("su21", "h20", "", "X", ["e2", "e3", "e4", "e5", "e6", "e7"], [], Dir(&["a", "b"])),
    fam!("su21", "h21", "", "X", ["e2", "e3", "e4", "e5", "e6", "e7", "e8"], [], Dir(&["a"])),
    fam!("su21", "h22", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["a"])),
    fam!("su21", "h23", "", "X", ["e1", "e2", "e3", "e4", "e5", "e6", "e7"], [], Dir(&["a"])),
    fam!("su21", "h24", "", "X", ["e1", "e2", "e3", "e4", "e5", "e7", "e8"], [], Dir(&["a"])),
    fam!("su21", "h25", "", "X", ["e1", "e2", "e3", "e4", "e6", "e7", "e8"], [], Dir(&["a"])),
    fam!(
        "su21",
        "h26",
        "",
        "X",
        ["e1", "e2", "e3", "e5", "e6", "e7", "e8"],
        [],
        Dir(&["a"]),
        "printed with a6 repeated in the last generator"
    ),
    fam!("su21", "h27", "", "X", ["e2", "e3", "e4", "e5", "e6", "e7", "e8"], [], Dir(&["a"])),
    fam!("sl2xg2", "h1", "", "X", ["x1", "x2", "y1", "y2"], [], Gen(ABCD)),
    fam!("sl2xg2", "h2", "", "X", ["x1", "x2", "y1", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h3", "", "X", ["x1", "x2", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h4", "", "X", ["x2", "x3", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h5", "", "X", ["x2", "x3", "y1", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h6", "", "X", ["x1", "x3", "y1", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h7", "", "X", ["x3", "y1", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h8", "", "X", ["x1", "x2", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h9", "", "X", ["x2", "x3", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h10", "", "X", ["x2", "x1", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h11", "", "X", ["x3", "y1", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h12k1", "", "X", ["x3", "y1", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h12k2", "", "X", ["x3", "y1", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h12k3", "", "X", ["x3", "y1", "y2", "y3"], [], Gen(ABCD)),
    fam!("sl2xg2", "h13", "", "X", ["x2", "x3", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h14", "", "X", ["x2", "x3", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h15", "", "X", ["x2", "x1", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h16", "", "X", ["x2", "x3", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h17", "", "X", ["x2", "x1", "y1", "y2", "y3"], [], Dir(&["a"])),
    fam!("sl2xg2", "h18", "", "X", ["x1", "x2", "y1", "y2", "y3"], [], Dir(&["a"])),
];
