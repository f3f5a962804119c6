use super::super::report::CheckResult;
use super::super::Context;
use super::guarded;
use crate::apartment::{base_line, Plane};
use crate::blocks::{format_rows, parse_rows, DIM};
use crate::gf5::{Gf5Matrix, Subspace};
use serde_json::json;

pub const PRINTED_M_S: [&str; 1] = ["[1.3..42]_5"];

pub const PRINTED_M_PK: [&str; 7] =
    ["[..124....]_1", "[1.3..42]_5", "[1.3..13]_7", "[1.3..42]_9", "[1.3..13]_11", "[1.3..42]_13", "[1.3..13]_15"];

pub const PRINTED_M_LK: [&str; 4] = ["[1.3..42]_5", "[122..32]_12", "[122..23]_14", "[1.3..13]_15"];

pub const PRINTED_M_FK: [&str; 10] = [
    "[.1.2..233]_1",
    "[1.3..42]_5",
    "[1.3..13]_7",
    "[13...24]_8",
    "[13...24]_9",
    "[122..32]_12",
    "[122..23]_13",
    "[122..23]_14",
    "[1.3..13]_15",
    "[13...31]_16",
];

/// Coordinates (1-based) spanning the fixed space of γ.
pub const FIX_GAMMA: [usize; 21] = [1, 2, 3, 10, 11, 16, 17, 22, 23, 28, 35, 42, 49, 56, 63, 70, 77, 84, 91, 98, 105];

fn printed(rows: &[&str]) -> Subspace {
    Subspace::row_space(&parse_rows(rows).expect("static section notation"))
}

/// Index sets `J_1..J_10` (1-based coordinates).
pub fn j_sets() -> [Vec<usize>; 10] {
    let j7: Vec<usize> = (0..12).map(|k| 28 + 7 * k).collect();
    let shift = |a: usize, b: usize| {
        let mut v: Vec<usize> = j7.iter().flat_map(|&x| [x + a, x + b]).collect();
        v.sort_unstable();
        v
    };
    [
        vec![1],
        vec![2],
        vec![3],
        (4..=9).collect(),
        vec![10, 11, 16, 17, 22, 23],
        [12..=15, 18..=21, 24..=27].into_iter().flatten().collect(),
        j7.clone(),
        shift(1, 2),
        shift(3, 4),
        shift(5, 6),
    ]
}

/// `U_{10+m}` spanned by `e_i + m·e_{i+2}` for `i ∈ J_9`.
pub fn u_mixed(m: i64) -> Subspace {
    let j9 = &j_sets()[8];
    let mut b = Gf5Matrix::zeros(j9.len(), DIM);
    for (r, &i) in j9.iter().enumerate() {
        b.set(r, i - 1, 1);
        b.set(r, i + 1, m);
    }
    Subspace::row_space(&b)
}

fn unit(indices: &[usize]) -> Subspace {
    Subspace::unit_span(DIM, &indices.iter().map(|i| i - 1).collect::<Vec<_>>())
}

fn compare(name: &str, computed: &Subspace, printed_rows: &[&str]) -> CheckResult {
    let p = printed(printed_rows);
    let got = format_rows(computed.basis());
    let missing: Vec<&str> = printed_rows.iter().copied().filter(|r| !got.iter().any(|g| g == r)).collect();
    let extra: Vec<&String> = got.iter().filter(|g| !printed_rows.contains(&g.as_str())).collect();
    CheckResult::new(
        name,
        *computed == p,
        json!({ "dim": computed.dim(), "computed": got, "printed_rows_not_reproduced": missing, "unexpected_rows": extra }),
    )
}

pub fn subspaces(ctx: &Context) -> Vec<CheckResult> {
    guarded("subspaces.sylow", || {
        let err = |e: crate::gf5::LinalgError| e.to_string();
        let b = &ctx.bundle;
        let f = &b.f;
        let s = ctx.sylow()?;
        let n = ctx.normalizer()?;
        let t = ctx.torus()?;
        let bl = base_line();
        let mut out = vec![
            CheckResult::new(
                "subspaces.sylow_order_15625",
                s.group.order() == 15625,
                json!({ "order": s.group.order(), "generators": s.labels, "subsets_examined": s.examined }),
            ),
            compare("subspaces.fix_s", &s.fixed, &PRINTED_M_S),
        ];
        let fix = &s.fixed;
        let s_gens: Vec<&Gf5Matrix> = s.generators.iter().collect();
        let st: Vec<&Gf5Matrix> = s_gens.iter().copied().chain(t.iter()).collect();
        let m_s = fix.span_closure(&s_gens).map_err(err)?;
        let m_st = fix.span_closure(&st).map_err(err)?;
        out.push(compare("subspaces.m_s", &m_s, &PRINTED_M_S));
        out.push(compare("subspaces.m_s_t", &m_st, &PRINTED_M_S));

        let hex = b.hex(&bl);
        let pk_gens = hex.all();
        let m_pk = fix.span_closure(&pk_gens).map_err(err)?;
        out.push(compare("subspaces.m_pk", &m_pk, &PRINTED_M_PK));

        let lifts_l = n.lifts(|w| w.act_line(&bl) == bl);
        let lk_gens: Vec<&Gf5Matrix> = std::iter::once(b.root(&bl)).chain(st.iter().copied()).chain(lifts_l.iter()).collect();
        let m_lk = fix.span_closure(&lk_gens).map_err(err)?;
        out.push(compare("subspaces.m_lk", &m_lk, &PRINTED_M_LK));

        let plane = Plane::new(bl.from(), bl.to(), "3c".parse().map_err(|e: crate::apartment::ApartmentError| e.to_string())?)
            .ok_or("1a, 2b, 3c do not span a plane")?;
        let lifts_f = n.lifts(|w| w.act_plane(&plane) == plane);
        let plane_roots: Vec<&Gf5Matrix> = plane.lines().iter().map(|l| b.root(l)).collect();
        let fk_gens: Vec<&Gf5Matrix> =
            plane_roots.into_iter().chain(st.iter().copied()).chain(lifts_f.iter()).collect();
        let m_fk = fix.span_closure(&fk_gens).map_err(err)?;
        out.push(compare("subspaces.m_fk", &m_fk, &PRINTED_M_FK));

        let spaces: [(&str, &Subspace, &[&Gf5Matrix]); 5] = [
            ("M_S", &m_s, &s_gens),
            ("M_S:T", &m_st, &st),
            ("M_PK", &m_pk, &pk_gens),
            ("M_LK", &m_lk, &lk_gens),
            ("M_FK", &m_fk, &fk_gens),
        ];
        let mut invariant = serde_json::Map::new();
        let mut dichotomy = serde_json::Map::new();
        let (mut inv_ok, mut dich_ok) = (true, true);
        for (name, sp, gens) in spaces {
            let inv = gens.iter().all(|g| sp.is_invariant(g).unwrap_or(false));
            let iso = sp.is_isotropic(f).map_err(err)?;
            inv_ok &= inv;
            dich_ok &= iso || sp.dim() == DIM;
            invariant.insert(name.into(), json!({ "generators": gens.len(), "invariant": inv }));
            dichotomy.insert(name.into(), json!({ "dim": sp.dim(), "isotropic": iso }));
        }
        out.push(CheckResult::new("subspaces.invariance", inv_ok, invariant));
        let printed_iso: serde_json::Map<String, serde_json::Value> = [
            ("M_S", &PRINTED_M_S[..]),
            ("M_PK", &PRINTED_M_PK[..]),
            ("M_LK", &PRINTED_M_LK[..]),
            ("M_FK", &PRINTED_M_FK[..]),
        ]
        .into_iter()
        .map(|(k, rows)| (k.to_string(), json!(printed(rows).is_isotropic(f).unwrap_or(false))))
        .collect();
        out.push(CheckResult::new(
            "subspaces.isotropy_dichotomy",
            dich_ok,
            json!({ "computed": dichotomy, "printed_isotropic": printed_iso }),
        ));
        Ok(out)
    })
}

pub fn decomposition(ctx: &Context) -> Vec<CheckResult> {
    guarded("decomposition", || {
        let err = |e: crate::gf5::LinalgError| e.to_string();
        let b = &ctx.bundle;
        let f = &b.f;
        let gens = b.n_generators();
        let us: Vec<Subspace> = j_sets().iter().map(|j| unit(j)).collect();
        let mut out = Vec::new();
        for (k, u) in us.iter().enumerate() {
            let inv = gens.iter().all(|g| u.is_invariant(g).unwrap_or(false));
            out.push(CheckResult::new(format!("decomposition.u{}_invariant", k + 1), inv, json!({ "dim": u.dim() })));
        }
        let mut not_orth = Vec::new();
        for i in 0..10 {
            for j in i + 1..10 {
                if !us[i].is_orthogonal_to(&us[j], f).map_err(err)? {
                    not_orth.push(format!("U{} U{}", i + 1, j + 1));
                }
            }
        }
        out.push(CheckResult::new("decomposition.pairwise_orthogonal", not_orth.is_empty(), json!({ "failing": not_orth })));
        let total: usize = us.iter().map(Subspace::dim).sum();
        let mut sum = Subspace::zero(DIM);
        for u in &us {
            sum = sum.sum(u).map_err(err)?;
        }
        out.push(CheckResult::new(
            "decomposition.direct_sum",
            total == DIM && sum.dim() == DIM,
            json!({ "dims": us.iter().map(Subspace::dim).collect::<Vec<_>>(), "sum_dim": sum.dim() }),
        ));
        for m in 1..=4 {
            let u = u_mixed(m);
            let inv = gens.iter().all(|g| u.is_invariant(g).unwrap_or(false));
            out.push(CheckResult::new(
                format!("decomposition.u{}_invariant", 10 + m),
                inv && u.dim() == 24,
                json!({ "dim": u.dim(), "basis": format!("e_i + {m} e_(i+2), i in J9") }),
            ));
        }

        let t = ctx.torus()?;
        let one = Gf5Matrix::identity(DIM);
        let involutions: Vec<&Gf5Matrix> = t.iter().filter(|z| !z.is_identity() && (*z * *z) == one).collect();
        let mut rows = Vec::new();
        let mut ok = involutions.len() == 3;
        for z in &involutions {
            let plus = Subspace::fixed_space(&[z]).map_err(err)?;
            let neg = -*z;
            let minus = Subspace::fixed_space(&[&neg]).map_err(err)?;
            let comp = plus.orth_complement(f).map_err(err)?;
            let dims = (plus.dim(), minus.dim());
            let units = plus.is_unit_spanned() && minus.is_unit_spanned();
            let orth = comp == minus;
            ok &= dims == (55, 56) && units && orth;
            rows.push(json!({
                "eigenvalues": super::eigen_row(z),
                "dim_plus": dims.0,
                "dim_minus": dims.1,
                "unit_spanned": units,
                "orthogonal_complements": orth,
            }));
        }
        out.push(CheckResult::new("decomposition.involution_eigenspaces", ok, json!({ "involutions": rows })));

        let fix = Subspace::fixed_space(&[&b.gamma]).map_err(err)?;
        let comp = fix.orth_complement(f).map_err(err)?;
        out.push(CheckResult::new(
            "decomposition.fix_gamma",
            fix.dim() == 21 && fix == unit(&FIX_GAMMA) && comp.dim() == 90,
            json!({ "dim": fix.dim(), "complement_dim": comp.dim(), "pivots": fix.pivots().iter().map(|p| p + 1).collect::<Vec<_>>() }),
        ));
        Ok(out)
    })
}
