use super::Expect::{NotReductive as NR, Open, Reductive as R};
use super::{ExpectedOutcome, ListedFamily, WitnessDef};

pub const PROPOSITIONS: &[&str] =
    &["Prop3", "Prop4", "Prop5", "Prop6", "Prop7", "Prop8", "Prop9", "Prop10", "Prop11", "Prop16"];

macro_rules! pf {
    ($label:literal, [$($p:literal),*], $cond:literal, [$($b:literal),* $(,)?]) => {
        ListedFamily { label: $label, params: &[$($p),*], conditions: $cond, basis: &[$($b),*], note: "" }
    };
    ($label:literal, [$($p:literal),*], $cond:literal, [$($b:literal),* $(,)?], $note:literal) => {
        ListedFamily { label: $label, params: &[$($p),*], conditions: $cond, basis: &[$($b),*], note: $note }
    };
}

macro_rules! out {
    ($prop:literal, $case:literal, $alg:literal, $h:literal, $region:literal, $e:expr) => {
        ExpectedOutcome { prop: $prop, case: $case, algebra: $alg, subalgebra: $h, region: $region, expect: $e }
    };
}

const NONE: super::Expect = NR(None);

pub static EXPECTED: &[ExpectedOutcome] = &[
    // sl2(C)
    out!("Prop3", "h1", "sl2C", "h1", "", NR(Some(WitnessDef { h: "e2 + e3", generator: 1, bracket: "2*e1 - 2*a1*(e2 + e3)" }))),
    out!("Prop3", "h2", "sl2C", "h2", "", NR(Some(WitnessDef { h: "e2 + e3", generator: 1, bracket: "-2*(e2 + e3)" }))),
    out!("Prop3", "h3", "sl2C", "h3", "", R(&[pf!("m", [], "", ["e1", "e2", "ie1", "ie2"])])),
    out!("Prop3", "h4", "sl2C", "h4", "", R(&[pf!("m_a", ["a"], "", ["e2", "e3", "ie1 + a*e1", "ie2", "ie3"])])),
    out!("Prop3", "h5", "sl2C", "h5", "", NR(Some(WitnessDef { h: "e2 + e3", generator: 1, bracket: "-2*(e2 + e3)" }))),
    out!("Prop3", "h6", "sl2C", "h6", "", R(&[pf!("m_b", ["b"], "", ["e1", "e2", "ie1", "ie2", "ie3 + b*e3"])])),
    // sl3(R), dimension 4
    out!("Prop4", "h1", "sl3R", "h1", "", NONE),
    out!("Prop4", "h2", "sl3R", "h2", "", NONE),
    out!("Prop4", "h3", "sl3R", "h3", "", NONE),
    out!("Prop4", "h4", "sl3R", "h4", "", NONE),
    out!("Prop4", "h5", "sl3R", "h5", "", R(&[pf!("m5", [], "", ["e1", "e2", "e3", "e4"])])),
    // dimension 3
    out!("Prop5", "h6", "sl3R", "h6", "", R(&[pf!("m6", [], "", ["e5", "e8", "e1 + e3", "e2 + e4", "e7 + e6"])])),
    out!("Prop5", "h7", "sl3R", "h7", "", R(&[pf!("m7", [], "", ["e5", "e8", "e1 - e3", "e2 - e4", "e7 + e6"])])),
    out!("Prop5", "h8", "sl3R", "h8", "", R(&[pf!("m8", [], "", ["e1", "e2", "e3", "e4", "e5 + e8"])])),
    out!("Prop5", "h9", "sl3R", "h9", "", NONE),
    out!("Prop5", "h10", "sl3R", "h10", "", NONE),
    out!("Prop5", "h11", "sl3R", "h11", "", NONE),
    out!("Prop5", "h12", "sl3R", "h12", "", NONE),
    out!("Prop5", "h13", "sl3R", "h13", "", NONE),
    out!("Prop5", "h14", "sl3R", "h14", "", NONE),
    out!("Prop5", "h15", "sl3R", "h15", "", NONE),
    out!("Prop5", "h16", "sl3R", "h16", "", NONE),
    out!("Prop5", "h17[b!=0]", "sl3R", "h17", "b != 0", NONE),
    out!("Prop5", "h17[b=0]", "sl3R", "h17", "b = 0", NONE),
    out!("Prop5", "h18", "sl3R", "h18", "", NONE),
    // dimension 2
    out!("Prop6", "h19", "sl3R", "h19", "", NONE),
    out!("Prop6", "h20", "sl3R", "h20", "", NONE),
    out!("Prop6", "h21", "sl3R", "h21", "", NONE),
    out!("Prop6", "h22", "sl3R", "h22", "", NONE),
    out!("Prop6", "h23", "sl3R", "h23", "", NONE),
    out!("Prop6", "h24", "sl3R", "h24", "", NONE),
    out!("Prop6", "h25", "sl3R", "h25", "", NONE),
    out!("Prop6", "h26", "sl3R", "h26", "", R(&[pf!("m26", [], "", ["e1", "e2", "e3", "e4", "e6", "e7"])])),
    out!("Prop6", "h27", "sl3R", "h27", "", NONE),
    out!("Prop6", "h28", "sl3R", "h28", "", NONE),
    out!("Prop6", "h29", "sl3R", "h29", "", NONE),
    out!("Prop6", "h30", "sl3R", "h30", "", R(&[pf!("m30", [], "", ["e1", "e2", "e3", "e4", "e5 - e8", "e6 + e7"])])),
    // dimension 1
    out!(
        "Prop7",
        "h31[generic]",
        "sl3R",
        "h31",
        "a notin {0, 1, -1/2, -2}",
        R(&[pf!("m_b", ["b"], "", ["e1", "e2", "e3", "e4", "e6", "e7", "e8 + b*(e5 + a*e8)"])])
    ),
    out!(
        "Prop7",
        "h31[a=-2]",
        "sl3R",
        "h31",
        "a = -2",
        R(&[pf!(
            "m_bcd",
            ["b", "c", "d"],
            "",
            ["e6", "e7", "e1 + b*(e5 - 2*e8)", "e3 + c*(e5 - 2*e8)", "e2", "e4", "e8 + d*(e5 - 2*e8)"]
        )])
    ),
    out!(
        "Prop7",
        "h31[a=-1/2]",
        "sl3R",
        "h31",
        "a = -1/2",
        R(&[pf!(
            "m_bcd",
            ["b", "c", "d"],
            "",
            ["e6", "e7", "e1", "e2 + b*(e5 - 1/2*e8)", "e3", "e4 + c*(e5 - 1/2*e8)", "e8 + d*(e5 - 1/2*e8)"]
        )])
    ),
    out!(
        "Prop7",
        "h31[a=1]",
        "sl3R",
        "h31",
        "a = 1",
        R(&[pf!(
            "m_bcd",
            ["b", "c", "d"],
            "",
            ["e1", "e2", "e3", "e4", "e6 + b*(e5 + e8)", "e7 + c*(e5 + e8)", "e8 + d*(e5 + e8)"]
        )])
    ),
    out!(
        "Prop7",
        "h32",
        "sl3R",
        "h32",
        "",
        R(&[pf!("m_d", ["d"], "", ["e1", "e2", "e3", "-e8 + 2*e4", "e6", "e7", "e5 + d*e8"])])
    ),
    out!("Prop7", "h33", "sl3R", "h33", "", NONE),
    out!("Prop7", "h34", "sl3R", "h34", "", NONE),
    out!(
        "Prop7",
        "h35",
        "sl3R",
        "h35",
        "",
        R(&[pf!("m_c", ["c"], "", ["e1", "e2", "e3", "e4", "e6 + e7", "e5 - e8", "e8 - 2*c*e7 + 2*c*b*e8"])])
    ),
    // su(2,1), dimension 4
    out!("Prop8", "h1", "su21", "h1", "", R(&[pf!("m1", [], "", ["e4", "e5", "e7", "e8"])])),
    out!("Prop8", "h2", "su21", "h2", "", NONE),
    out!("Prop8", "h3", "su21", "h3", "", NONE),
    out!("Prop8", "h4", "su21", "h4", "", R(&[pf!("m4", [], "", ["e2", "e3", "e4", "e5"])])),
    // dimension 3
    out!("Prop9", "h5", "su21", "h5", "", NONE),
    out!("Prop9", "h6", "su21", "h6", "", R(&[pf!("m6", [], "", ["e1", "e3", "e5", "e6", "e8"])])),
    out!("Prop9", "h7", "su21", "h7", "", R(&[pf!("m7", [], "", ["e1 - 1/2*e6", "e2", "e3", "e4", "e5"])])),
    out!("Prop9", "h8", "su21", "h8", "", NONE),
    out!("Prop9", "h9", "su21", "h9", "", NONE),
    out!("Prop9", "h10", "su21", "h10", "", NONE),
    out!("Prop9", "h11", "su21", "h11", "", NONE),
    // dimension 2
    out!("Prop10", "h12", "su21", "h12", "", R(&[pf!("m12", [], "", ["e2", "e3", "e4", "e5", "e7", "e8"])])),
    out!("Prop10", "h13", "su21", "h13", "", NONE),
    out!("Prop10", "h14", "su21", "h14", "", NONE),
    out!("Prop10", "h15", "su21", "h15", "", NONE),
    out!("Prop10", "h16", "su21", "h16", "", NONE),
    out!("Prop10", "h17", "su21", "h17", "", NONE),
    out!("Prop10", "h18[a!=0]", "su21", "h18", "a != 0; d := (b*c - 1/2)/a", NONE),
    out!("Prop10", "h18[a=0]", "su21", "h18", "a = 0; b != 0; c := 1/(2*b)", NONE),
    out!("Prop10", "h19", "su21", "h19", "", NONE),
    out!(
        "Prop10",
        "h20",
        "su21",
        "h20",
        "",
        R(&[pf!(
            "m20",
            [],
            "",
            [
                "e6 + e7",
                "e2 + e5",
                "e4 - e3",
                "e4 - b*e8 + 2*a*e1 - a*e6",
                "e2 + a*e8 + 2*b*e1 - b*e6",
                "e6 + c*e8 + b*e5 - a*e4"
            ]
        )])
    ),
    // dimension 1
    out!(
        "Prop11",
        "case1:h21[a=-2]",
        "su21",
        "h21",
        "a = -2",
        R(&[pf!(
            "m_bcd",
            ["b", "c", "d"],
            "",
            ["e2 + b*(e1 - 2*e6)", "e3 + c*(e1 - 2*e6)", "e6 + d*(e1 - 2*e6)", "e4", "e5", "e7", "e8"]
        )])
    ),
    out!(
        "Prop11",
        "case2:h21[a=1]",
        "su21",
        "h21",
        "a = 1",
        R(&[pf!(
            "m_bcd",
            ["b", "c", "d"],
            "",
            ["e2", "e3", "e7", "e8", "e4 + d*(e1 + e6)", "e5 + b*(e1 + e6)", "e6 + c*(e1 + e6)"]
        )])
    ),
    out!(
        "Prop11",
        "case3:h21[a=-1/2]",
        "su21",
        "h21",
        "a = -1/2",
        R(&[pf!(
            "m_bcd",
            ["b", "c", "d"],
            "",
            ["e2", "e3", "e4", "e5", "e6 + b*(e1 - 1/2*e6)", "e7 + c*(e1 - 1/2*e6)", "e8 + d*(e1 - 1/2*e6)"]
        )])
    ),
    out!(
        "Prop11",
        "case4:h21[generic]",
        "su21",
        "h21",
        "a notin {-1/2, -2, 1}",
        R(&[pf!("m_b", ["b"], "", ["e2", "e3", "e4", "e5", "e6 + b*(e1 + a*e6)", "e7", "e8"])])
    ),
    out!(
        "Prop11",
        "case5:h22",
        "su21",
        "h22",
        "",
        R(&[pf!("m_a", ["a"], "", ["e1 + a*e6", "e2", "e3", "e4", "e5", "e7", "e8"])])
    ),
    out!(
        "Prop11",
        "case6:h23",
        "su21",
        "h23",
        "",
        R(&[pf!("m_a", ["a"], "", ["e1 + a*e8", "e2", "e3", "e4", "e5", "e6", "e7"])])
    ),
    out!(
        "Prop11",
        "case7:h24[c!=0]",
        "su21",
        "h24",
        "c != 0",
        R(&[pf!("m_b", ["b"], "", ["e1 + b*c*e8", "e2", "e3", "e4", "e5", "e6 + e7", "e7 - e8/c"])])
    ),
    out!("Prop11", "h24[c=0]", "su21", "h24", "c = 0", NONE),
    out!(
        "Prop11",
        "case8:h25[c!=0]",
        "su21",
        "h25",
        "c != 0",
        R(&[pf!(
            "m_d",
            ["d"],
            "",
            [
                "e1 - (c^3*d - c*d - b)/(2*c)*e8",
                "e2 + e8/c",
                "e3 + c*d*e8",
                "e7 - (b + c*d)/c*e8",
                "e4 - e3",
                "e2 + e5",
                "e6 + e7"
            ]
        )])
    ),
    out!("Prop11", "h25[c=0]", "su21", "h25", "c = 0", NONE),
    out!(
        "Prop11",
        "case9:h26[c!=0]",
        "su21",
        "h26",
        "c != 0",
        R(&[pf!(
            "m_d",
            ["d"],
            "",
            [
                "e2 - d*c*e8",
                "e3 - (1 + d*c^2*a + a^2)/c*e8",
                "e6 - (a^3 + a - b*c + d*c^2 + d*c^2*a^2)/c^2*e8",
                "e5 + e2",
                "e6 + e7",
                "e4 - e3",
                "e1 + (b*c + c^2*a - a - a^3 + c^4*d - c^2*d - c^2*a^2*d)/(2*c^2)*e8"
            ]
        )])
    ),
    out!("Prop11", "h26[c=0]", "su21", "h26", "c = 0", NONE),
    out!(
        "Prop11",
        "case10:h27[c!=0]",
        "su21",
        "h27",
        "c != 0; 8*d*c - 3*a + 4*a*c^2 != 0",
        R(&[pf!(
            "m_f",
            ["f"],
            "",
            [
                "e6 + e7",
                "e4 - e3",
                "e5 + e2",
                "e3 + f*(e1 - 1/2*e6 + c*e8)",
                "e2 - 2*c/3*e4 - 4*a/3*e1 - 2*a/3*e7 + 2*d/3*e8",
                "e7 - b/c*e8 + a/c*e4 + d/c*e2",
                "e8 - (8*a*c - 4*f*c^2 - 9*f + 12*d)/(2*(8*d*c - 3*a + 4*a*c^2))*(e1 - 1/2*e6 + c*e8)"
            ],
            "printed numerator of the last generator has a spurious +24*f*d^2 term"
        )])
    ),
    out!(
        "Prop11",
        "case10-degenerate:h27",
        "su21",
        "h27",
        "c != 0; a := 8*d*c/(3 - 4*c^2)",
        Open("8dc - 3a + 4ac^2 = 0 is excluded by the case-10 side condition and not treated elsewhere")
    ),
    out!("Prop11", "h27[c=0]", "su21", "h27", "c = 0", NONE),
    // sl2 ⊕ sl2
    out!("Prop16", "case10:sl2xsl2.h1", "sl2xsl2", "h1", "", R(&[pf!("m1", [], "", ["x1", "x2", "y1", "y2"])])),
    out!("Prop16", "sl2xsl2.h2", "sl2xsl2", "h2", "", NONE),
    out!("Prop16", "case11:sl2xsl2.h3", "sl2xsl2", "h3", "", R(&[pf!("m3", [], "", ["x1", "x2", "y2", "y3"])])),
    out!("Prop16", "case12:sl2xsl2.h4", "sl2xsl2", "h4", "", R(&[pf!("m4", [], "", ["x2", "x3", "y2", "y3"])])),
    out!("Prop16", "sl2xsl2.h5", "sl2xsl2", "h5", "", NONE),
    out!("Prop16", "sl2xsl2.h6", "sl2xsl2", "h6", "", NONE),
    out!("Prop16", "sl2xsl2.h7", "sl2xsl2", "h7", "", NONE),
    out!("Prop16", "cases1-3:sl2xsl2.h8", "sl2xsl2", "h8", "", R(H8)),
    out!("Prop16", "cases4-6:sl2xsl2.h9", "sl2xsl2", "h9", "", R(H9)),
    out!("Prop16", "sl2xsl2.h10", "sl2xsl2", "h10", "", NONE),
    out!("Prop16", "sl2xsl2.h11", "sl2xsl2", "h11", "", NONE),
    out!("Prop16", "sl2xsl2.h12[k=e1]", "sl2xsl2", "h12k1", "", NONE),
    out!("Prop16", "sl2xsl2.h12[k=e2+e3]", "sl2xsl2", "h12k2", "", NONE),
    out!("Prop16", "sl2xsl2.h12[k=e3]", "sl2xsl2", "h12k3", "", NONE),
    out!(
        "Prop16",
        "case13:sl2xsl2.h13",
        "sl2xsl2",
        "h13",
        "",
        R(&[pf!("m_m", ["m"], "", ["x2", "x3", "y3", "y2", "m*x1 + (1 + m)*y1"])])
    ),
    out!(
        "Prop16",
        "case14:sl2xsl2.h14",
        "sl2xsl2",
        "h14",
        "",
        R(&[pf!("m_n", ["n"], "", ["x2", "x3", "y1", "y2 + y3", "n*x1 + y2"])])
    ),
    out!("Prop16", "sl2xsl2.h15", "sl2xsl2", "h15", "", NONE),
    out!("Prop16", "case7:sl2xsl2.h16", "sl2xsl2", "h16", "", R(H16)),
    out!("Prop16", "case8:sl2xsl2.h17", "sl2xsl2", "h17", "", R(H17)),
    out!("Prop16", "case9:sl2xsl2.h18", "sl2xsl2", "h18", "", R(H18)),
    // sl2 ⊕ so3
    out!("Prop16", "sl2xso3.h7", "sl2xso3", "h7", "", NONE),
    out!("Prop16", "cases1-3:sl2xso3.h8", "sl2xso3", "h8", "", R(H8)),
    out!("Prop16", "cases4-6:sl2xso3.h9", "sl2xso3", "h9", "", R(H9)),
    out!("Prop16", "sl2xso3.h10", "sl2xso3", "h10", "", NONE),
    out!("Prop16", "sl2xso3.h12[k=e3]", "sl2xso3", "h12k3", "", NONE),
    out!("Prop16", "case7:sl2xso3.h16", "sl2xso3", "h16", "", R(H16)),
    out!("Prop16", "case8:sl2xso3.h17", "sl2xso3", "h17", "", R(H17)),
    out!("Prop16", "case9:sl2xso3.h18", "sl2xso3", "h18", "", R(H18)),
];

const H8: &[ListedFamily] = &[
    pf!("m_a", ["a"], "", ["x1", "x2", "y1", "y2", "a*x3 + y3"]),
    pf!("m_b", ["b"], "", ["x1", "x2", "y1", "b*x3 + y2", "y3"]),
    pf!("m_c", ["c"], "", ["x1", "x2", "c*x3 + y1", "y2", "y3"]),
];

const H9: &[ListedFamily] = &[
    pf!("m_d", ["d"], "", ["x2", "x3", "y1", "y2", "d*x1 + y3"]),
    pf!("m_f", ["f"], "", ["x2", "x3", "y1", "f*x1 + y2", "y3"]),
    pf!("m_g", ["g"], "", ["x2", "x3", "g*x1 + y1", "y2", "y3"]),
];

const H16: &[ListedFamily] = &[pf!("m_h", ["h"], "", ["x2", "x3", "y1", "y2", "h*x1 + (1 + h)*y3"])];

const H17: &[ListedFamily] = &[pf!("m_k", ["k"], "", ["x3 + k*y3", "x1", "y1", "y2", "x2 + x3"])];

const H18: &[ListedFamily] = &[pf!("m_l", ["l"], "", ["l*x3 + (1 + l)*y3", "x1", "x2", "y1", "y2"])];
