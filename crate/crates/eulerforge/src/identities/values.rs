//! Weight-six alternating Euler sums in closed form.

use super::kit::*;
use super::{Domain, IdentityCase, Params};
use crate::error::{Error, Result};
use crate::numkernel::{PrecisionContext, Real};

type Table = &'static [(&'static str, &'static [(i64, i64, &'static str)])];

const Z: &str = "zeta_bar5_1";

static QUADRATIC: Table = &[
    ("S[1,-2;3]", &[(-5, 2, Z), (13, 32, "zeta3^2"), (143, 181440, "pi^6")]),
    (
        "S[1,-2;-3]",
        &[
            (1, 3, "pi^2 Li4_half"),
            (-211, 64, "zeta3^2"),
            (7, 24, "pi^2 zeta3 log2"),
            (103, 45360, "pi^6"),
            (1, 72, "pi^2 log2^4"),
            (-1, 72, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-2;3]",
        &[
            (-7, 2, Z),
            (153, 64, "zeta3^2"),
            (-5, 12, "pi^2 zeta3 log2"),
            (217, 32, "zeta5 log2"),
            (-701, 181440, "pi^6"),
        ],
    ),
    (
        "S[-1,2;-3]",
        &[
            (5, 2, Z),
            (-1, 3, "pi^2 Li4_half"),
            (-61, 64, "zeta3^2"),
            (5, 16, "pi^2 zeta3 log2"),
            (-155, 32, "zeta5 log2"),
            (23, 5184, "pi^6"),
            (-1, 72, "pi^2 log2^4"),
            (1, 72, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-2;-3]",
        &[
            (-5, 1, Z),
            (-1, 6, "pi^2 Li4_half"),
            (39, 16, "zeta3^2"),
            (-9, 16, "pi^2 zeta3 log2"),
            (217, 32, "zeta5 log2"),
            (-5, 2268, "pi^6"),
            (-1, 144, "pi^2 log2^4"),
            (1, 144, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,2;3]",
        &[
            (5, 1, Z),
            (-7, 4, "zeta3^2"),
            (29, 48, "pi^2 zeta3 log2"),
            (-155, 32, "zeta5 log2"),
            (781, 362880, "pi^6"),
        ],
    ),
    (
        "S[1,2;-3]",
        &[
            (3, 2, Z),
            (1, 6, "pi^2 Li4_half"),
            (-49, 64, "zeta3^2"),
            (7, 48, "pi^2 zeta3 log2"),
            (29, 181440, "pi^6"),
            (1, 144, "pi^2 log2^4"),
            (-1, 144, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-3;-2]",
        &[
            (5, 1, Z),
            (1, 3, "pi^2 Li4_half"),
            (-75, 32, "zeta3^2"),
            (3, 4, "pi^2 zeta3 log2"),
            (-93, 32, "zeta5 log2"),
            (-71, 72576, "pi^6"),
            (1, 72, "pi^2 log2^4"),
            (-1, 72, "pi^4 log2^2"),
        ],
    ),
];

static CUBIC: Table = &[
    (
        "S[-1,1,-2;2]",
        &[
            (-9, 4, Z),
            (1, 6, "pi^2 Li4_half"),
            (-4, 1, "Li6_half"),
            (2, 1, "Li4_half log2^2"),
            (35, 32, "zeta3^2"),
            (7, 6, "zeta3 log2^3"),
            (-1, 3, "pi^2 zeta3 log2"),
            (279, 64, "zeta5 log2"),
            (187, 362880, "pi^6"),
            (7, 90, "log2^6"),
            (-1, 16, "pi^2 log2^4"),
            (-1, 144, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,1,2;2]",
        &[
            (-13, 4, Z),
            (-1, 12, "pi^2 Li4_half"),
            (12, 1, "Li6_half"),
            (2, 1, "Li4_half log2^2"),
            (8, 1, "Li5_half log2"),
            (45, 32, "zeta3^2"),
            (1, 4, "pi^2 zeta3 log2"),
            (31, 8, "zeta5 log2"),
            (-319, 22680, "pi^6"),
            (1, 30, "log2^6"),
            (-5, 288, "pi^2 log2^4"),
            (1, 288, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-1,-2;2]",
        &[
            (16, 1, Z),
            (-1, 6, "pi^2 Li4_half"),
            (-32, 1, "Li6_half"),
            (-8, 1, "Li5_half log2"),
            (-43, 8, "zeta3^2"),
            (-7, 6, "zeta3 log2^3"),
            (-3, 8, "pi^2 zeta3 log2"),
            (-93, 4, "zeta5 log2"),
            (15833, 362880, "pi^6"),
            (1, 45, "log2^6"),
            (-1, 144, "pi^2 log2^4"),
            (103, 720, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-1,-2;-2]",
        &[
            (12, 1, Z),
            (-24, 1, "Li6_half"),
            (4, 1, "Li4_half log2^2"),
            (-129, 32, "zeta3^2"),
            (-11, 48, "pi^2 zeta3 log2"),
            (-93, 4, "zeta5 log2"),
            (5669, 181440, "pi^6"),
            (2, 15, "log2^6"),
            (-1, 12, "pi^2 log2^4"),
            (49, 360, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-1,-1;3]",
        &[
            (3, 1, Z),
            (12, 1, "Li5_half log2"),
            (-27, 16, "zeta3^2"),
            (7, 4, "zeta3 log2^3"),
            (9, 16, "pi^2 zeta3 log2"),
            (-279, 16, "zeta5 log2"),
            (97, 40320, "pi^6"),
            (-1, 10, "log2^6"),
            (1, 6, "pi^2 log2^4"),
            (19, 240, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-1,-1;-3]",
        &[
            (9, 1, Z),
            (-12, 1, "Li6_half"),
            (-6, 1, "Li4_half log2^2"),
            (-285, 64, "zeta3^2"),
            (9, 16, "pi^2 zeta3 log2"),
            (-279, 16, "zeta5 log2"),
            (2, 105, "pi^6"),
            (-4, 15, "log2^6"),
            (7, 24, "pi^2 log2^4"),
            (19, 240, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-1,1;3]",
        &[
            (11, 2, Z),
            (-8, 1, "Li6_half"),
            (-3, 2, "zeta3^2"),
            (-7, 6, "zeta3 log2^3"),
            (1, 12, "pi^2 zeta3 log2"),
            (-341, 32, "zeta5 log2"),
            (131, 12096, "pi^6"),
            (-1, 90, "log2^6"),
            (1, 36, "pi^2 log2^4"),
            (4, 45, "pi^4 log2^2"),
        ],
    ),
    (
        "S[-1,-1,1;-3]",
        &[
            (4, 1, Z),
            (-1, 6, "pi^2 Li4_half"),
            (-4, 1, "Li6_half"),
            (2, 1, "Li4_half log2^2"),
            (4, 1, "Li5_half log2"),
            (-83, 64, "zeta3^2"),
            (-7, 12, "zeta3 log2^3"),
            (-1, 16, "pi^2 zeta3 log2"),
            (-341, 32, "zeta5 log2"),
            (121, 15120, "pi^6"),
            (2, 45, "log2^6"),
            (-1, 48, "pi^2 log2^4"),
            (23, 240, "pi^4 log2^2"),
        ],
    ),
    (
        "S[1,1,1;-3]",
        &[
            (9, 2, Z),
            (1, 2, "pi^2 Li4_half"),
            (-12, 1, "Li6_half"),
            (-6, 1, "Li4_half log2^2"),
            (-12, 1, "Li5_half log2"),
            (-207, 64, "zeta3^2"),
            (-7, 4, "zeta3 log2^3"),
            (7, 16, "pi^2 zeta3 log2"),
            (257, 20160, "pi^6"),
            (-1, 6, "log2^6"),
            (7, 48, "pi^2 log2^4"),
            (-1, 48, "pi^4 log2^2"),
        ],
    ),
];

fn lookup(table: Table, p: &Params) -> Result<&'static [(i64, i64, &'static str)]> {
    let key = p.t("sum")?;
    table
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Domain(format!("no closed form recorded for {key}")))
}

fn lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    s(p.t("sum")?, ctx)
}

fn quad_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    closed_form(lookup(QUADRATIC, p)?, ctx)
}

fn cubic_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    closed_form(lookup(CUBIC, p)?, ctx)
}

fn keys(table: Table) -> Vec<&'static str> {
    table.iter().map(|(k, _)| *k).collect()
}

pub(super) fn quadratic_cases() -> Vec<IdentityCase> {
    vec![IdentityCase::new(
        "quad_values",
        "alternating quadratic sums of weight six",
        "we obtain the following results",
        lhs,
        quad_rhs,
    )
    .param(Domain::texts("sum", &keys(QUADRATIC)))]
}

pub(super) fn cubic_cases() -> Vec<IdentityCase> {
    vec![IdentityCase::new(
        "cubic_values",
        "alternating cubic sums of weight six",
        "we can get the following cubic sums",
        lhs,
        cubic_rhs,
    )
    .param(Domain::texts("sum", &keys(CUBIC)))]
}
