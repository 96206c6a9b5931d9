//! Seeded randomized and exhaustive checks, one suite per reproducible
//! claim. The CLI `verify` command and the acceptance harness both run
//! these; a suite never panics on a failed case but records it.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::building::{
    chamber_from_basis, codelta, decode_coords, delta, encode_coords, monomial, opposite, project_twin, standard_chamber,
    Chamber, PanelParam,
};
use crate::cells::{bott_equivalence_check, bruhat_covers, cell_dim, flag_poincare};
use crate::coxeter::{coxeter_matrix, min_coset_reps, reduce, word_to_affine, AffineWeylElt, Kind, Word};
use crate::error::Result;
use crate::exactalg::{GaussRat, LaurentMatrix};
use crate::lattice::{panel_chamber, Side};
use crate::sample;
use crate::veronese::{
    caveat_check, eigen_identity_holds, gauge, in_x, norm_sqr, perp, pi_tls, projector_of, recover_flag_with_weights,
    spherical_veronese, traceless, truncated_eigenvector, Subspace,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.cases += 1;
                self.failures.push(format!("{}: error {e}", what()));
            }
        }
    }

    pub fn passed(&self) -> usize {
        self.cases - self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.name, self.passed(), self.cases)
    }
}

/// Suite names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "bruhat-diagram",
    "cell-lists",
    "bott",
    "flag-series",
    "delta",
    "codelta",
    "twin-axioms",
    "coords",
    "spherical",
    "eigen",
    "caveat",
    "gauge",
    "calibration",
];

pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = &mut rng;
    Some(match name {
        "bruhat-diagram" => bruhat_diagram(),
        "cell-lists" => cell_lists(),
        "bott" => bott(),
        "flag-series" => flag_series(6),
        "delta" => delta_recovery(r, 200, 8),
        "codelta" => codelta_recovery(r, 200, 8),
        "twin-axioms" => twin_axioms(r, 100),
        "coords" => coords_round_trip(r, 200, 8),
        "spherical" => spherical(r, 100),
        "eigen" => eigen_identity(r, 10, 3),
        "caveat" => caveat(),
        "gauge" => gauge_action(r, 100),
        "calibration" => calibration(r, 50),
        _ => return None,
    })
}

fn random_reduced_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let cm = crate::building::affine_cm(n);
    // reduce a longer random word until the length bound holds
    loop {
        let len = rng.gen_range(0..=max_len + 2);
        let w = reduce(&sample::word(rng, n, len), &cm).expect("labels in range");
        if w.len() <= max_len {
            return w;
        }
    }
}

/// `W_{124}/W_{24}` in `Ã_3` and its covering relations.
pub fn bruhat_diagram() -> SuiteReport {
    let mut rep = SuiteReport::new("bruhat-diagram");
    let expected = ["", "1", "2 1", "4 1", "2 4 1", "1 2 4 1"];
    let arrows: BTreeSet<(&str, &str)> = [
        ("", "1"),
        ("1", "4 1"),
        ("1", "2 1"),
        ("4 1", "2 4 1"),
        ("2 1", "2 4 1"),
        ("2 4 1", "1 2 4 1"),
    ]
    .into_iter()
    .collect();
    let run = || -> Result<(Vec<String>, BTreeSet<(String, String)>)> {
        let cm = coxeter_matrix(Kind::AffineA, 4)?.restrict(&[1, 2, 4])?;
        let reps = min_coset_reps(&cm, &[2, 4], 10)?;
        let shown: Vec<String> = reps.iter().map(|w| w.to_string()).collect();
        let covers = bruhat_covers(&cm, &reps)?
            .into_iter()
            .map(|(a, b)| (shown[a].clone(), shown[b].clone()))
            .collect();
        Ok((shown, covers))
    };
    match run() {
        Ok((shown, covers)) => {
            rep.check(shown == expected, || format!("cosets {shown:?}"));
            let want: BTreeSet<(String, String)> =
                arrows.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
            rep.check(covers == want, || format!("covers {covers:?}"));
        }
        Err(e) => rep.check(false, || format!("error {e}")),
    }
    rep
}

/// Cell dimensions of `Gr_2(C^4)` and of `V_2` through degree 6.
pub fn cell_lists() -> SuiteReport {
    let mut rep = SuiteReport::new("cell-lists");
    let dims = |kind: Kind, n: usize, j: &[usize], max: usize| -> Result<Vec<usize>> {
        let cm = coxeter_matrix(kind, n)?;
        min_coset_reps(&cm, j, max)?
            .iter()
            .map(|w| cell_dim(w, j, &cm, 2))
            .collect()
    };
    let gr = dims(Kind::FiniteA, 4, &[1, 3], 10);
    rep.check_result(gr.map(|d| d == [0, 2, 4, 4, 6, 8]), || "Gr_2(C^4) dimensions".into());
    let v2 = dims(Kind::AffineA, 4, &[2, 3, 4], 3);
    rep.check_result(v2.map(|d| d == [0, 2, 4, 4, 6, 6, 6]), || "V_2 dimensions".into());
    rep
}

pub fn bott() -> SuiteReport {
    let mut rep = SuiteReport::new("bott");
    for (k, deg) in [(2, 5), (1, 1), (3, 5)] {
        rep.check_result(bott_equivalence_check(k, deg), || format!("k = {k} through degree {deg}"));
    }
    rep
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Full-flag series against inversion counts over `S_n` and against
/// `Π (1 + t² + ⋯ + t^{2i})`.
pub fn flag_series(max_n: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("flag-series");
    for n in 2..=max_n {
        let mut brute = vec![0u64; n * (n - 1) + 1];
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            brute[2 * inv] += 1;
            if !next_permutation(&mut p) {
                break;
            }
        }
        let mut product = vec![1u64];
        for i in 1..n {
            let mut next = vec![0u64; product.len() + 2 * i];
            for (d, &x) in product.iter().enumerate() {
                for e in 0..=i {
                    next[d + 2 * e] += x;
                }
            }
            product = next;
        }
        let series = coxeter_matrix(Kind::FiniteA, n).and_then(|cm| flag_poincare(&cm));
        rep.check_result(series.map(|s| s.coeffs == brute && s.coeffs == product), || format!("n = {n}"));
    }
    rep
}

/// `δ(gC₀, g b₁ n_w b₂ C₀) = w` on both halves.
pub fn delta_recovery<R: Rng>(rng: &mut R, count: usize, max_len: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("delta");
    for case in 0..count {
        let n = rng.gen_range(2..=4);
        let side = if rng.gen_bool(0.5) { Side::Plus } else { Side::Minus };
        let w = random_reduced_word(rng, n, max_len);
        let b1 = sample::borel(rng, side, n, 4, 2);
        let b2 = sample::borel(rng, side, n, 4, 2);
        let g = sample::sl(rng, n, 3, 1);
        let run = || -> Result<bool> {
            let a = word_to_affine(&w, n)?;
            let c = Chamber::from_rep(side, g.clone())?;
            let d = Chamber::from_rep(side, &(&(&g * &b1) * &monomial(&a)) * &b2)?;
            Ok(delta(&c, &d)? == a)
        };
        rep.check_result(run(), || format!("case {case}: n = {n}, {side}, w = {w}"));
    }
    rep
}

/// `δ*(g b⁻ C₀⁻, g b⁻ n_w b⁺ C₀⁺) = w` and Tw1.
pub fn codelta_recovery<R: Rng>(rng: &mut R, count: usize, max_len: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("codelta");
    for case in 0..count {
        let n = rng.gen_range(2..=4);
        let w = random_reduced_word(rng, n, max_len);
        let mut run = || -> Result<bool> {
            let a = word_to_affine(&w, n)?;
            let (cm, cp) = twin_pair_at(rng, &a)?;
            Ok(codelta(&cm, &cp)? == a && codelta(&cp, &cm)? == a.inverse())
        };
        rep.check_result(run(), || format!("case {case}: n = {n}, w = {w}"));
    }
    rep
}

/// A twin pair `(g b⁻ C₀⁻, g b⁻ n_w b⁺ C₀⁺)` at codistance `w`.
fn twin_pair_at<R: Rng>(rng: &mut R, w: &AffineWeylElt) -> Result<(Chamber, Chamber)> {
    let n = w.n();
    let bm = sample::borel(rng, Side::Minus, n, 4, 2);
    let bp = sample::borel(rng, Side::Plus, n, 4, 2);
    let b0 = sample::borel(rng, Side::Minus, n, 4, 2);
    let g = sample::sl(rng, n, 3, 1);
    let c = Chamber::from_rep(Side::Minus, &g * &b0)?;
    let d = Chamber::from_rep(Side::Plus, &(&(&g * &bm) * &monomial(w)) * &bp)?;
    Ok((c, d))
}

/// Tw2 and Tw3 on `count` constructed instances each, `n = 3`. A Tw2
/// instance picks `s` with `ℓ(ws) < ℓ(w)`, a Tw3 instance one with
/// `ℓ(ws) > ℓ(w)`.
pub fn twin_axioms<R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("twin-axioms");
    let n = 3;
    for case in 0..2 * count {
        let tw2 = case < count;
        let (w, s) = loop {
            let w = word_to_affine(&random_reduced_word(rng, n, 6), n).expect("labels in range");
            let ss: Vec<usize> = (1..=n).filter(|&s| w.has_right_descent(s) == tw2).collect();
            if !ss.is_empty() {
                break (w, ss[rng.gen_range(0..ss.len())]);
            }
        };
        let t = sample::nonzero_gauss(rng, 3);
        let mut run = || -> Result<bool> {
            let (c, d) = twin_pair_at(rng, &w)?;
            let gs = AffineWeylElt::generator(n, s)?;
            let ws = w.compose(&gs);
            if codelta(&c, &d)? != w {
                return Ok(false);
            }
            let panel = d.panel(s)?;
            if tw2 {
                // every other chamber of the panel has codistance ws; the
                // chart puts d itself at t = 0
                let mut ok = true;
                for p in [PanelParam::Finite(t.clone()), PanelParam::Infinity] {
                    let e = panel_chamber(&panel, &p)?;
                    ok &= delta(&d, &e)? == gs && codelta(&c, &e)? == ws;
                }
                Ok(ok)
            } else {
                let e = project_twin(&panel, &c)?;
                Ok(delta(&d, &e)? == gs && codelta(&c, &e)? == ws)
            }
        };
        let label = if tw2 { "Tw2" } else { "Tw3" };
        rep.check_result(run(), || format!("{label} instance {case}: w = {w}, s = {s}"));
    }
    rep
}

/// `decode ∘ encode = id` on Schubert-cell chambers.
pub fn coords_round_trip<R: Rng>(rng: &mut R, count: usize, max_len: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("coords");
    for case in 0..count {
        let n = rng.gen_range(2..=4);
        let w = random_reduced_word(rng, n, max_len);
        let g = sample::sl(rng, n, 3, 1);
        let b = sample::borel(rng, Side::Plus, n, 4, 2);
        let run = || -> Result<bool> {
            let c0 = Chamber::from_rep(Side::Plus, g.clone())?;
            let d0 = Chamber::from_rep(Side::Minus, g.clone())?;
            let e = Chamber::from_rep(Side::Plus, &(&g * &b) * &monomial(&word_to_affine(&w, n)?))?;
            let coords = encode_coords(&c0, &d0, &e, &w)?;
            Ok(coords.len() == w.len() && decode_coords(&c0, &d0, &w, &coords)? == e)
        };
        rep.check_result(run(), || format!("case {case}: n = {n}, w = {w}"));
    }
    rep
}

fn lines_n3() -> Vec<Subspace> {
    let vals = [GaussRat::zero(), GaussRat::one(), -GaussRat::one(), GaussRat::i()];
    let mut out: Vec<Subspace> = Vec::new();
    for a in &vals {
        for b in &vals {
            for c in &vals {
                let v = vec![a.clone(), b.clone(), c.clone()];
                if v.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let s = Subspace::span(3, &[v]).expect("length 3");
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Flag recovery on random flags (`n ≤ 5`) and incidence as minimal
/// distance over all lines and planes of a finite configuration in `n = 3`.
pub fn spherical<R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("spherical");
    for case in 0..count {
        let n = rng.gen_range(2..=5);
        let types = sample::type_set(rng, n);
        let f = sample::flag(rng, n, &types);
        let w = sample::weights(rng, types.len());
        let run = || -> Result<bool> {
            let x = spherical_veronese(&f, &w)?;
            let (g, p) = recover_flag_with_weights(&x)?;
            Ok(g == f && p == w)
        };
        rep.check_result(run(), || format!("round trip {case}: n = {n}, types {types:?}"));
    }
    let lines = lines_n3();
    let planes: Vec<Subspace> = lines.iter().map(perp).collect();
    let phi = |v: &Subspace| traceless(&projector_of(v).expect("proper subspace"));
    let pl: Vec<_> = lines.iter().map(phi).collect();
    let pp: Vec<_> = planes.iter().map(phi).collect();
    // d_12² = 2/3 from the coordinate pair span{e1} ⊂ span{e1, e2}
    let d12 = BigRational::new(2.into(), 3.into());
    let mut bad = Vec::new();
    for (a, l) in lines.iter().enumerate() {
        for (b, p) in planes.iter().enumerate() {
            let d = norm_sqr(&(&pl[a] - &pp[b]));
            let ok = if p.contains(l) { d == d12 } else { d > d12 };
            if !ok {
                bad.push((a, b));
            }
        }
    }
    rep.check(bad.is_empty(), || format!("incidence/distance mismatch at {bad:?}"));
    rep
}

/// The eigen-identity for `count` random unitary loops per `n ∈ {2, 3}`,
/// every vertex type, `|m| ≤ m_bound`.
pub fn eigen_identity<R: Rng>(rng: &mut R, count: usize, m_bound: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("eigen");
    for n in 2..=3 {
        for case in 0..count {
            let g = sample::unitary_loop(rng, n, 1);
            for k in 0..n {
                rep.check_result(eigen_identity_holds(&g, k, m_bound), || format!("n = {n}, loop {case}, k = {k}"));
            }
        }
    }
    rep
}

/// No truncated eigenvectors for the caveat operator, `n ∈ {2, 3}`,
/// window 8; `Π_1^tls` as a positive control.
pub fn caveat() -> SuiteReport {
    let mut rep = SuiteReport::new("caveat");
    for n in 2..=3 {
        rep.check(caveat_check(n, 8), || format!("caveat operator has an eigenvector, n = {n}"));
        rep.check(truncated_eigenvector(&pi_tls(n, 1), 8).is_some(), || format!("control failed, n = {n}"));
    }
    rep
}

fn random_x<R: Rng>(rng: &mut R, n: usize) -> LaurentMatrix {
    let y = LaurentMatrix::from_fn(n, |_, _| sample::poly(rng, -1, 1, 2));
    let s = &y + &y.sharp();
    let t = s.trace().scale(&GaussRat::from_frac(1, n as i64));
    &s - &LaurentMatrix::identity(n).scale(&t)
}

/// `𝔛`-preservation and the cocycle law for random pairs of loops.
pub fn gauge_action<R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("gauge");
    for case in 0..count {
        let n = rng.gen_range(2..=3);
        let g = sample::unitary_loop(rng, n, 1);
        let h = sample::unitary_loop(rng, n, 1);
        let x = random_x(rng, n);
        let run = || -> Result<bool> {
            let hx = gauge(&h, &x)?;
            Ok(in_x(&hx) && gauge(&(&g * &h), &x)? == gauge(&g, &hx)?)
        };
        rep.check_result(run(), || format!("pair {case}, n = {n}"));
    }
    rep
}

/// Standard pair back to back, and chambers from a common basis opposite.
pub fn calibration<R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("calibration");
    for n in 2..=4 {
        let run = || -> Result<bool> {
            let w = codelta(&standard_chamber(Side::Minus, n), &standard_chamber(Side::Plus, n))?;
            Ok(w.is_identity())
        };
        rep.check_result(run(), || format!("standard pair, n = {n}"));
    }
    for case in 0..count {
        let n = rng.gen_range(2..=4);
        let b = sample::basis(rng, n, 4, 2);
        let run = || -> Result<bool> {
            let cp = chamber_from_basis(Side::Plus, &b)?;
            let cm = chamber_from_basis(Side::Minus, &b)?;
            Ok(opposite(&cm, &cp)? && codelta(&cm, &cp)?.is_identity())
        };
        rep.check_result(run(), || format!("basis pair {case}, n = {n}"));
    }
    rep
}
