//! The Wilson-loop / Kauffman-bracket dictionary: the R-matrix skein
//! identity, images of boundary-parallel and consecutive-puncture curves,
//! and the Chebyshev-threaded central elements.
//!
//! Curves are restricted to the classes with closed-form Wilson images:
//! boundary-parallel curves (small loops around one puncture, and the outer
//! boundary) and simple curves around consecutive punctures. The braiding
//! operator at the root of unity is ř = i · flip ∘ R_{V2,V2}, and with
//! ζ = i·ε^{1/2} it satisfies the Temperley-Lieb skein relations.

use crate::matrix::ScalarMat;
use crate::report::CheckItem;
use crate::scalar::{Cyclotomic, RatFunc, Scalar, ScalarOps};
use crate::uqsl2::{EpsAlgebra, GenAlgebra, PbwAlgebra, TensorElement};
use std::fmt;

/// Which curve class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveKind {
    /// Small loop around puncture i (1-based, 1 ≤ i ≤ n).
    Boundary(usize),
    /// The outer boundary (the (n+1)-st component).
    OuterBoundary,
    /// Simple curve around the consecutive punctures start .. start+len-1.
    Arc { start: usize, len: usize },
}

/// A curve with its Chebyshev power and linking normalization exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub kind: CurveKind,
    /// Chebyshev power c ≥ 1: the class of c parallel copies is T_c(curve).
    pub chebyshev_power: u32,
    /// Exponent of i in the normalization of the Wilson image (supplied with
    /// the curve datum, not computed from an embedding).
    pub linking_exponent: i64,
}

impl CurveSpec {
    pub fn boundary(i: usize) -> Self {
        CurveSpec {
            kind: CurveKind::Boundary(i),
            chebyshev_power: 1,
            linking_exponent: 0,
        }
    }

    pub fn outer() -> Self {
        CurveSpec {
            kind: CurveKind::OuterBoundary,
            chebyshev_power: 1,
            linking_exponent: 0,
        }
    }

    pub fn arc(start: usize, len: usize) -> Self {
        CurveSpec {
            kind: CurveKind::Arc { start, len },
            chebyshev_power: 1,
            linking_exponent: 0,
        }
    }

    pub fn with_power(mut self, c: u32) -> Self {
        self.chebyshev_power = c;
        self
    }

    pub fn with_linking(mut self, lk: i64) -> Self {
        self.linking_exponent = lk;
        self
    }

    pub fn validate(&self, n: usize) -> Result<(), String> {
        match &self.kind {
            CurveKind::Boundary(i) => {
                if *i < 1 || *i > n {
                    return Err(format!("boundary index {} out of range 1..{}", i, n));
                }
            }
            CurveKind::OuterBoundary => {}
            CurveKind::Arc { start, len } => {
                if *len < 1 || *start < 1 || start + len - 1 > n {
                    return Err(format!(
                        "arc {}..{} out of range 1..{}",
                        start,
                        start + len - 1,
                        n
                    ));
                }
            }
        }
        if self.chebyshev_power < 1 {
            return Err("chebyshev power must be at least 1".into());
        }
        Ok(())
    }

    /// Parse the command-line form: `boundary:2`, `boundary:outer`,
    /// `arc:1..3`, optionally with a Chebyshev power suffix `^5` or `^l`
    /// (resolved against the configured l), and an optional linking suffix
    /// `,lk=3`.
    pub fn parse(s: &str, l: u32) -> Result<CurveSpec, String> {
        let (s, lk) = match s.split_once(",lk=") {
            Some((head, tail)) => (
                head,
                tail.parse::<i64>().map_err(|e| format!("bad linking exponent: {}", e))?,
            ),
            None => (s, 0),
        };
        let (s, power) = match s.split_once('^') {
            Some((head, "l")) => (head, l),
            Some((head, p)) => (
                head,
                p.parse::<u32>().map_err(|e| format!("bad chebyshev power: {}", e))?,
            ),
            None => (s, 1),
        };
        let spec = if let Some(rest) = s.strip_prefix("boundary:") {
            if rest == "outer" {
                CurveSpec::outer()
            } else {
                CurveSpec::boundary(
                    rest.parse::<usize>()
                        .map_err(|e| format!("bad boundary index: {}", e))?,
                )
            }
        } else if let Some(rest) = s.strip_prefix("arc:") {
            let (a, b) = rest
                .split_once("..")
                .ok_or_else(|| format!("arc must look like arc:1..3, got {}", s))?;
            let start: usize = a.parse().map_err(|e| format!("bad arc start: {}", e))?;
            let end: usize = b.parse().map_err(|e| format!("bad arc end: {}", e))?;
            if end < start {
                return Err("arc end before start".into());
            }
            CurveSpec::arc(start, end - start + 1)
        } else {
            return Err(format!("unknown curve spec {}", s));
        };
        Ok(spec.with_power(power).with_linking(lk))
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CurveKind::Boundary(i) => write!(f, "boundary:{}", i)?,
            CurveKind::OuterBoundary => write!(f, "boundary:outer")?,
            CurveKind::Arc { start, len } => write!(f, "arc:{}..{}", start, start + len - 1)?,
        }
        if self.chebyshev_power != 1 {
            write!(f, "^{}", self.chebyshev_power)?;
        }
        if self.linking_exponent != 0 {
            write!(f, ",lk={}", self.linking_exponent)?;
        }
        Ok(())
    }
}

/// The Wilson image of a curve in the embedded loop algebra over any
/// coefficient layer. The linking normalization is not applied here (it
/// involves i, which lives in the cyclotomic layer only); see
/// [`wilson_curve_at_root`].
pub fn wilson_curve<C: Scalar, S: ScalarOps<C>>(
    alg: &PbwAlgebra<C, S>,
    spec: &CurveSpec,
    n: usize,
) -> TensorElement<C> {
    spec.validate(n).expect("valid curve spec");
    let base = match &spec.kind {
        CurveKind::Boundary(i) => alg.omega_site(n, *i),
        CurveKind::OuterBoundary => alg.eta(n),
        CurveKind::Arc { start, len } => {
            let prod = alg.gen_matrix_product(n, *start, start + len - 1);
            alg.quantum_trace(&[2], &prod)
        }
    };
    if spec.chebyshev_power == 1 {
        base
    } else {
        alg.tensor_chebyshev(spec.chebyshev_power, &base)
    }
}

/// The Wilson image at the root of unity, with the i^{lk} normalization
/// applied.
pub fn wilson_curve_at_root(
    eps: &EpsAlgebra,
    spec: &CurveSpec,
    n: usize,
) -> TensorElement<Cyclotomic> {
    let base = wilson_curve(eps, spec, n);
    if spec.linking_exponent == 0 {
        return base;
    }
    let i_unit = eps.ops().field().imag_unit().pow(spec.linking_exponent);
    eps.tensor_scale(&base, &i_unit)
}

// ---- The skein identity at the R-matrix level ----

fn residual_from_mat<C: Scalar>(m: &ScalarMat<C>) -> Option<String> {
    if m.is_zero() {
        None
    } else {
        let mut out = Vec::new();
        for i in 0..m.rows {
            for j in 0..m.cols {
                if !m.at(i, j).is_zero() {
                    out.push(format!("({},{}): {}", i + 1, j + 1, m.at(i, j)));
                }
            }
        }
        Some(out.join("; "))
    }
}

/// Verify the Kauffman-bracket structure of ř = i · flip ∘ R_{V2,V2} at the
/// root of unity: the writhe decomposition through the Temperley-Lieb
/// element, its projector equation, the inverse decomposition, intertwining,
/// rank, and the loop value.
pub fn kauffman_r_identity(l: u32) -> Vec<CheckItem> {
    let eps = EpsAlgebra::for_l(l);
    let ops = eps.ops();
    let field = ops.field();
    let mut items = Vec::new();
    let tag = format!("skein/l={}", l);

    let r = eps.r_matrix(2, 2);
    let r_check = {
        // flip ∘ R then multiply by i
        let flipped = r.flip_left(2);
        flipped.scale(ops, &field.imag_unit())
    };
    let zeta = field.zeta();
    let zeta_inv = zeta.inv().expect("ζ invertible");
    let id4 = ScalarMat::identity(ops, 4);

    // U := ζ (ř - ζ id)
    let u = r_check
        .sub(ops, &id4.scale(ops, &zeta))
        .scale(ops, &zeta);

    // ř = ζ id + ζ^{-1} U
    let resid = r_check.sub(
        ops,
        &id4.scale(ops, &zeta).add(ops, &u.scale(ops, &zeta_inv)),
    );
    items.push(CheckItem::residual(
        format!("{}/writhe-decomposition", tag),
        "ř = ζ·id + ζ^-1·U".to_string(),
        residual_from_mat(&resid),
    ));

    // U^2 = -(ζ^2 + ζ^{-2}) U
    let loop_value = zeta.pow(2).add(&zeta.pow(-2)).neg();
    let resid = u.mul(ops, &u).sub(ops, &u.scale(ops, &loop_value));
    items.push(CheckItem::residual(
        format!("{}/projector-equation", tag),
        "U² = -(ζ² + ζ^-2)·U".to_string(),
        residual_from_mat(&resid),
    ));

    // loop value equals the specialized quantum dimension: -(ζ²+ζ^{-2}) = ε + ε^{-1}
    {
        let eps_val = field.epsilon();
        let diff = loop_value.sub(&eps_val.add(&eps_val.inv().unwrap()));
        items.push(CheckItem::residual(
            format!("{}/loop-value", tag),
            "-(ζ² + ζ^-2) = ε + ε^-1".to_string(),
            if diff.is_zero() { None } else { Some(diff.to_string()) },
        ));
    }

    // ř^{-1} = ζ^{-1} id + ζ U
    {
        let r_inv = r_check.inverse(ops).expect("ř invertible");
        let resid = r_inv.sub(
            ops,
            &id4.scale(ops, &zeta_inv).add(ops, &u.scale(ops, &zeta)),
        );
        items.push(CheckItem::residual(
            format!("{}/inverse-decomposition", tag),
            "ř^-1 = ζ^-1·id + ζ·U".to_string(),
            residual_from_mat(&resid),
        ));
    }

    // U is an intertwiner of rank one factoring through the trivial
    // submodule: it commutes with the module action and E·U = F·U = 0.
    {
        let vv = eps.tensor_module(&[2, 2]);
        for (name, g) in [("E", &vv.e), ("F", &vv.f), ("K", &vv.k)] {
            let comm = u.mul(ops, g).sub(ops, &g.mul(ops, &u));
            items.push(CheckItem::residual(
                format!("{}/intertwiner/{}", tag, name),
                format!("U commutes with the action of {}", name),
                residual_from_mat(&comm),
            ));
        }
        for (name, g) in [("E", &vv.e), ("F", &vv.f)] {
            let img = g.mul(ops, &u);
            items.push(CheckItem::residual(
                format!("{}/trivial-image/{}", tag, name),
                format!("{} annihilates the image of U", name),
                residual_from_mat(&img),
            ));
        }
        let rank = u.rank(ops);
        items.push(if rank == 1 {
            CheckItem::pass(format!("{}/rank", tag), "U has rank one".to_string())
        } else {
            CheckItem::fail(
                format!("{}/rank", tag),
                "U has rank one".to_string(),
                format!("rank = {}", rank),
            )
        });
    }

    // characteristic polynomial of ř is (t - ζ)^3 (t + ζ^{-3})
    {
        // expand det(t·id - ř) with polynomial entries: use Leverrier-style
        // traces of powers instead, exact in the cyclotomic field.
        // c(t) = t^4 - e1 t^3 + e2 t^2 - e3 t + e4 from power sums.
        let mut power = id4.clone();
        let mut psums = Vec::new();
        for _ in 1..=4 {
            power = power.mul(ops, &r_check);
            psums.push(power.trace(ops));
        }
        let e1 = psums[0].clone();
        let e2 = e1
            .mul(&psums[0])
            .sub(&psums[1])
            .scale(&crate::scalar::q_from(1, 2));
        let e3 = e2
            .mul(&psums[0])
            .sub(&e1.mul(&psums[1]))
            .add(&psums[2])
            .scale(&crate::scalar::q_from(1, 3));
        let e4 = e3
            .mul(&psums[0])
            .sub(&e2.mul(&psums[1]))
            .add(&e1.mul(&psums[2]))
            .sub(&psums[3])
            .scale(&crate::scalar::q_from(1, 4));
        // expected elementary symmetric functions of {ζ, ζ, ζ, -ζ^{-3}}
        let z3 = zeta.pow(3);
        let zm3 = zeta.pow(-3);
        let exp_e1 = zeta.scale(&crate::scalar::q_from(3, 1)).sub(&zm3);
        let exp_e2 = zeta
            .pow(2)
            .scale(&crate::scalar::q_from(3, 1))
            .sub(&zeta.mul(&zm3).scale(&crate::scalar::q_from(3, 1)));
        let exp_e3 = z3.sub(&zeta.pow(2).mul(&zm3).scale(&crate::scalar::q_from(3, 1)));
        let exp_e4 = z3.mul(&zm3).neg();
        let mut all_ok = true;
        let mut witness = String::new();
        for (k, (got, want)) in [
            (e1, exp_e1),
            (e2, exp_e2),
            (e3, exp_e3),
            (e4, exp_e4),
        ]
        .into_iter()
        .enumerate()
        {
            let d = got.sub(&want);
            if !d.is_zero() {
                all_ok = false;
                witness = format!("e_{}: {}", k + 1, d);
            }
        }
        items.push(if all_ok {
            CheckItem::pass(
                format!("{}/eigenvalues", tag),
                "ř has eigenvalues ζ (multiplicity 3) and -ζ^-3".to_string(),
            )
        } else {
            CheckItem::fail(
                format!("{}/eigenvalues", tag),
                "ř has eigenvalues ζ (multiplicity 3) and -ζ^-3".to_string(),
                witness,
            )
        });
    }
    items
}

// ---- Curve images and centrality ----

/// Check the boundary-curve images, the commutativity of the boundary
/// polynomial algebra, and the degenerate agreement of the length-n arc with
/// the outer boundary.
pub fn boundary_image_suite(n: usize) -> Vec<CheckItem> {
    let alg = GenAlgebra::global();
    let mut items = Vec::new();
    let tag = format!("skein/n={}", n);
    // boundary i maps to ω^{(i)} (the Casimir at slot i)
    for i in 1..=n {
        let w = wilson_curve(&*alg, &CurveSpec::boundary(i), n);
        let expect = alg.embed_at(&alg.casimir(), i - 1, n);
        let diff = alg.tensor_sub(&w, &expect);
        let z = diff.is_zero();
        items.push(CheckItem::residual(
            format!("{}/boundary{}-image", tag, i),
            format!("boundary curve {} maps to the Casimir at slot {}", i, i),
            if z { None } else { Some(diff) },
        ));
    }
    // outer boundary maps to η, and the full-length arc agrees with it
    {
        let outer = wilson_curve(&*alg, &CurveSpec::outer(), n);
        let arc = wilson_curve(&*alg, &CurveSpec::arc(1, n), n);
        let diff = alg.tensor_sub(&outer, &arc);
        let z = diff.is_zero();
        items.push(CheckItem::residual(
            format!("{}/outer-equals-full-arc", tag),
            "the outer boundary image equals the full-length arc image".to_string(),
            if z { None } else { Some(diff) },
        ));
        // η is the coproduct image of ω (the product-matrix route)
        use crate::uqsl2::Hopf;
        let eta_route = alg.coproduct_n(&alg.casimir(), n);
        let diff = alg.tensor_sub(&outer, &eta_route);
        let z = diff.is_zero();
        items.push(CheckItem::residual(
            format!("{}/eta-coproduct-route", tag),
            "η equals the iterated coproduct of the one-site quantum trace".to_string(),
            if z { None } else { Some(diff) },
        ));
    }
    // the boundary images commute pairwise (they generate a commutative
    // polynomial algebra)
    let mut curves: Vec<(String, TensorElement<RatFunc>)> = (1..=n)
        .map(|i| (format!("omega^({})", i), wilson_curve(&*alg, &CurveSpec::boundary(i), n)))
        .collect();
    curves.push(("eta".to_string(), wilson_curve(&*alg, &CurveSpec::outer(), n)));
    for i in 0..curves.len() {
        for j in (i + 1)..curves.len() {
            let comm = alg.tensor_commutator(&curves[i].1, &curves[j].1);
            let z = comm.is_zero();
            items.push(CheckItem::residual(
                format!("{}/commute/{}-{}", tag, curves[i].0, curves[j].0),
                format!("[{}, {}] = 0", curves[i].0, curves[j].0),
                if z { None } else { Some(comm) },
            ));
        }
    }
    items
}

/// Linear independence of the boundary-curve monomials of degree ≤ 3 in
/// (ω^{(1)}, ..., ω^{(n)}, η): the polynomial algebra they generate has no
/// collisions at low degree.
pub fn boundary_independence(n: usize, max_degree: u32) -> CheckItem {
    let alg = GenAlgebra::global();
    let ops = alg.ops();
    let mut gens: Vec<TensorElement<RatFunc>> = (1..=n)
        .map(|i| wilson_curve(&*alg, &CurveSpec::boundary(i), n))
        .collect();
    // On the annulus (n = 1) the outer boundary is isotopic to the puncture
    // boundary and its image coincides with ω^{(1)}; it joins the generating
    // set only for n ≥ 2.
    if n >= 2 {
        gens.push(wilson_curve(&*alg, &CurveSpec::outer(), n));
    }
    // enumerate monomials of total degree ≤ max_degree
    let mut monomials: Vec<Vec<u32>> = vec![vec![0; gens.len()]];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for m in &monomials {
            for g in 0..gens.len() {
                let mut m2 = m.clone();
                m2[g] += 1;
                // keep sorted-unique: only bump indexes >= last nonzero
                if m[g + 1..].iter().all(|&e| e == 0) {
                    next.push(m2);
                }
            }
        }
        monomials.extend(next);
        monomials.sort();
        monomials.dedup();
    }
    // evaluate each monomial and collect coefficients against a common basis
    let values: Vec<TensorElement<RatFunc>> = monomials
        .iter()
        .map(|m| {
            let mut acc = alg.tensor_one(n);
            for (g, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    acc = alg.tensor_mul(&acc, &gens[g]);
                }
            }
            acc
        })
        .collect();
    let mut basis: Vec<Vec<crate::uqsl2::PbwMonomial>> = Vec::new();
    for v in &values {
        for (m, _) in v.terms() {
            if !basis.contains(m) {
                basis.push(m.clone());
            }
        }
    }
    basis.sort();
    let mat = ScalarMat::from_fn(values.len(), basis.len(), |i, j| {
        values[i]
            .coeff(&basis[j])
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    });
    let rank = mat.rank(ops);
    if rank == values.len() {
        CheckItem::pass(
            format!("skein/n={}/independence-deg{}", n, max_degree),
            format!(
                "the {} boundary-curve monomials of degree ≤ {} are linearly independent",
                values.len(),
                max_degree
            ),
        )
    } else {
        CheckItem::fail(
            format!("skein/n={}/independence-deg{}", n, max_degree),
            format!(
                "the {} boundary-curve monomials of degree ≤ {} are linearly independent",
                values.len(),
                max_degree
            ),
            format!("rank {} < {}", rank, values.len()),
        )
    }
}

/// Chebyshev threading produces central elements: for every consecutive arc,
/// T_l of its Wilson image at ε commutes with all 4n generators and matches
/// the trace of the Frobenius product.
pub fn chebyshev_center_suite(n: usize, l: u32) -> Vec<CheckItem> {
    let eps = EpsAlgebra::for_l(l);
    let mut items = Vec::new();
    let tag = format!("skein/n={}/l={}", n, l);
    let gens = crate::graphalg::all_generators(&*eps, n);
    for start in 1..=n {
        for len in 1..=(n - start + 1) {
            let spec = CurveSpec::arc(start, len).with_power(l);
            let threaded = wilson_curve(&eps, &spec, n);
            // equality with the Frobenius-product trace
            let mut frprod = crate::rootcenter::frobenius_matrix(&eps, n, start);
            for i in (start + 1)..(start + len) {
                frprod = eps.mat_mul(&frprod, &crate::rootcenter::frobenius_matrix(&eps, n, i));
            }
            let rhs = eps.tensor_add(frprod.at(0, 0), frprod.at(1, 1));
            let diff = eps.tensor_sub(&threaded, &rhs);
            let z = diff.is_zero();
            items.push(CheckItem::residual(
                format!("{}/arc{}-{}/threading", tag, start, start + len - 1),
                format!(
                    "T_{}(W(arc {}..{})) equals the Frobenius-product trace",
                    l,
                    start,
                    start + len - 1
                ),
                if z { None } else { Some(diff) },
            ));
            for (gname, g) in &gens {
                let comm = eps.tensor_commutator(&threaded, g);
                let z = comm.is_zero();
                items.push(CheckItem::residual(
                    format!("{}/arc{}-{}/central/{}", tag, start, start + len - 1, gname),
                    format!(
                        "T_{}(W(arc {}..{})) commutes with {}",
                        l,
                        start,
                        start + len - 1,
                        gname
                    ),
                    if z { None } else { Some(comm) },
                ));
            }
        }
    }
    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn assert_all_pass(items: Vec<CheckItem>) {
        for item in items {
            assert_eq!(item.status, Status::Pass, "{}: {:?}", item.id, item.witness);
        }
    }

    #[test]
    fn kauffman_l3_l5() {
        assert_all_pass(kauffman_r_identity(3));
        assert_all_pass(kauffman_r_identity(5));
    }

    #[test]
    fn boundary_images_n2() {
        assert_all_pass(boundary_image_suite(2));
    }

    #[test]
    fn independence_n2() {
        let item = boundary_independence(2, 3);
        assert_eq!(item.status, Status::Pass, "{:?}", item.witness);
    }

    #[test]
    fn chebyshev_center_n2() {
        assert_all_pass(chebyshev_center_suite(2, 3));
    }

    #[test]
    fn curve_spec_parsing() {
        let c = CurveSpec::parse("arc:1..3^l", 5).unwrap();
        assert_eq!(c.kind, CurveKind::Arc { start: 1, len: 3 });
        assert_eq!(c.chebyshev_power, 5);
        let c = CurveSpec::parse("boundary:2^4,lk=-1", 3).unwrap();
        assert_eq!(c.kind, CurveKind::Boundary(2));
        assert_eq!(c.chebyshev_power, 4);
        assert_eq!(c.linking_exponent, -1);
        assert_eq!(c.to_string(), "boundary:2^4,lk=-1");
        assert!(CurveSpec::parse("arc:3..1", 3).is_err());
        let c = CurveSpec::parse("boundary:outer", 3).unwrap();
        assert_eq!(c.kind, CurveKind::OuterBoundary);
    }

    #[test]
    fn linking_normalization() {
        let eps = EpsAlgebra::for_l(3);
        let spec = CurveSpec::boundary(1).with_linking(2);
        let w = wilson_curve_at_root(&eps, &spec, 1);
        // i^2 = -1 times the plain image
        let plain = wilson_curve(&eps, &CurveSpec::boundary(1), 1);
        assert_eq!(w, eps.tensor_neg(&plain));
    }
}
