use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twinbuild::exactalg::{GaussRat, LaurentMatrix, LaurentPoly, QMat};
use twinbuild::sample;
use twinbuild::veronese::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// `d_ij² = (j - i)(n - j + i)/n`, summed entrywise from the coordinate
/// diagonals `Φ(span{e_1..e_i}) = diag(-(n-i)/n, …, i/n, …)`.
fn coordinate_distance_sqr(n: i64, i: i64, j: i64) -> BigRational {
    let d = (j - i).abs();
    q(d * (n - d), n)
}

/// Random `#`-fixed traceless Laurent matrix.
fn random_x(r: &mut ChaCha8Rng, n: usize) -> LaurentMatrix {
    let y = LaurentMatrix::from_fn(n, |_, _| sample::poly(r, -1, 1, 2));
    let s = &y + &y.sharp();
    let t = s.trace().scale(&GaussRat::from_frac(1, n as i64));
    &s - &LaurentMatrix::identity(n).scale(&t)
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
                let s = Subspace::span(3, &[v]).unwrap();
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[test]
fn coordinate_distances_match_closed_form() {
    for n in 2..=5 {
        for i in 1..n {
            for j in 1..n {
                assert_eq!(
                    incidence_distance_sqr(n, i, j).unwrap(),
                    coordinate_distance_sqr(n as i64, i as i64, j as i64)
                );
            }
        }
    }
}

#[test]
fn incidence_is_minimal_distance_n3() {
    let lines = lines_n3();
    let planes: Vec<Subspace> = lines.iter().map(perp).collect();
    let phi = |v: &Subspace| traceless(&projector_of(v).unwrap());
    let d12 = coordinate_distance_sqr(3, 1, 2);
    let (pl, pp): (Vec<QMat>, Vec<QMat>) = (lines.iter().map(phi).collect(), planes.iter().map(phi).collect());
    let mut incident_pairs = 0;
    for (l, a) in lines.iter().zip(&pl) {
        for (p, b) in planes.iter().zip(&pp) {
            let d = norm_sqr(&(a - b));
            if p.contains(l) {
                incident_pairs += 1;
                assert_eq!(d, d12);
            } else {
                assert!(d > d12);
            }
        }
        for (m, b) in lines.iter().zip(&pl) {
            assert_eq!(norm_sqr(&(a - b)).is_zero(), l == m);
        }
    }
    assert!(incident_pairs > lines.len());
}

#[test]
fn trace_of_projectors() {
    let mut r = rng(1);
    for n in 2..=5 {
        for k in 1..n {
            let v = sample::subspace(&mut r, n, k);
            let x = projector_of(&v).unwrap();
            assert_eq!(x.trace(), GaussRat::from_int((n - k) as i64));
        }
    }
}

#[test]
fn standard_apartment_images_are_diagonal() {
    for n in 2..=4 {
        let dims: Vec<usize> = (1..n).collect();
        let flag = SubspaceFlag::standard(n, &dims).unwrap();
        let w = vec![q(1, n as i64 - 1); n - 1];
        let x = spherical_veronese(&flag, &w).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(x.get(i, j).is_zero(), i != j || x.get(i, i).is_zero());
            }
        }
        let diag: Vec<BigRational> = (0..n).map(|i| x.get(i, i).re.clone()).collect();
        assert!(diag.windows(2).all(|p| p[0] < p[1]));
        // permuted coordinate flags stay diagonal
        let perm = QMat::from_fn(n, n, |i, j| GaussRat::from_int(((i + 1) % n == j) as i64));
        let y = spherical_veronese(&flag.transform(&perm), &w).unwrap();
        assert!((0..n).all(|i| (0..n).all(|j| i == j || y.get(i, j).is_zero())));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn projector_properties(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let k = r.gen_range(1..n);
        let v = sample::subspace(&mut r, n, k);
        let x = projector_of(&v).unwrap();
        prop_assert_eq!(&(&x * &x), &x);
        prop_assert_eq!(&x.star(), &x);
        prop_assert_eq!(Subspace::span(n, &x.kernel()).unwrap(), v.clone());
        let image: Vec<Vec<GaussRat>> = (0..n).map(|j| x.column(j)).collect();
        prop_assert_eq!(Subspace::span(n, &image).unwrap(), perp(&v));
        prop_assert_eq!(projector_of(&perp(&v)).unwrap(), &QMat::identity(n) - &x);
    }

    #[test]
    fn perp_is_an_involutive_complement(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let k = r.gen_range(0..=n);
        let v = sample::subspace(&mut r, n, k);
        let w = perp(&v);
        prop_assert_eq!(w.dim(), n - k);
        prop_assert_eq!(perp(&w), v.clone());
        let mut all: Vec<Vec<GaussRat>> = (0..k).map(|i| v.basis().row(i)).collect();
        all.extend((0..n - k).map(|i| w.basis().row(i)));
        prop_assert_eq!(Subspace::span(n, &all).unwrap().dim(), n);
        let types = sample::type_set(&mut r, n);
        let f = sample::flag(&mut r, n, &types);
        let fp = f.perp();
        let mut rev: Vec<usize> = f.types().iter().map(|d| n - d).collect();
        rev.reverse();
        prop_assert_eq!(fp.types(), rev);
        prop_assert_eq!(fp.perp(), f);
    }

    #[test]
    fn flag_round_trip(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let types = sample::type_set(&mut r, n);
        let f = sample::flag(&mut r, n, &types);
        let w = sample::weights(&mut r, types.len());
        let x = spherical_veronese(&f, &w).unwrap();
        prop_assert!(x.trace().is_zero());
        prop_assert_eq!(&x.star(), &x);
        let (g, p) = recover_flag_with_weights(&x).unwrap();
        prop_assert_eq!(g, f);
        prop_assert_eq!(p, w);
    }

    #[test]
    fn eigenvalues_are_shifted_partial_sums(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let types = sample::type_set(&mut r, n);
        let f = sample::flag(&mut r, n, &types);
        let w = sample::weights(&mut r, types.len());
        let x = spherical_veronese(&f, &w).unwrap();
        // layer l has eigenvalue Σ_{i<l} p_i - Σ_i p_i (n - d_i)/n
        let nn = BigRational::from_integer((n as i64).into());
        let shift = types.iter().zip(&w).fold(BigRational::zero(), |acc, (&d, p)| {
            acc + p * BigRational::from_integer(((n - d) as i64).into()) / &nn
        });
        let mut dims = vec![0];
        dims.extend(types.iter().copied());
        dims.push(n);
        let eig = eigen_decomposition(&x).unwrap();
        prop_assert_eq!(eig.len(), types.len() + 1);
        let mut partial = BigRational::zero();
        let mut total = BigRational::zero();
        for (l, (lambda, space)) in eig.iter().enumerate() {
            prop_assert_eq!(lambda, &(&partial - &shift));
            prop_assert_eq!(space.dim(), dims[l + 1] - dims[l]);
            total += lambda * BigRational::from_integer((space.dim() as i64).into());
            if l < w.len() {
                partial += &w[l];
            }
        }
        prop_assert!(total.is_zero());
    }

    #[test]
    fn spherical_equivariance(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let types = sample::type_set(&mut r, n);
        let f = sample::flag(&mut r, n, &types);
        let w = sample::weights(&mut r, types.len());
        let u = sample::unitary(&mut r, n);
        prop_assert!(is_unitary(&u));
        let lhs = spherical_veronese(&f.transform(&u), &w).unwrap();
        let rhs = &(&u * &spherical_veronese(&f, &w).unwrap()) * &u.star();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unitary_loops(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let k = r.gen_range(0..=n);
        let p = sample::projector(&mut r, n, k);
        let g = unitary_loop(&p).unwrap();
        prop_assert!(is_unitary_loop(&g));
        prop_assert_eq!(g.unit_det(), Some((GaussRat::one(), k as i64)));
        let u = sample::unitary(&mut r, n);
        let conj = &(&u * &p) * &u.star();
        prop_assert!(is_unitary_loop(&unitary_loop(&conj).unwrap()));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn gauge_preserves_x_and_composes(seed in any::<u64>(), n in 2usize..=3) {
        let mut r = rng(seed);
        let g = sample::unitary_loop(&mut r, n, 1);
        let h = sample::unitary_loop(&mut r, n, 1);
        let x = random_x(&mut r, n);
        prop_assert!(in_x(&x));
        let hx = gauge(&h, &x).unwrap();
        prop_assert!(in_x(&hx));
        prop_assert_eq!(gauge(&(&g * &h), &x).unwrap(), gauge(&g, &hx).unwrap());
        let u = sample::unitary(&mut r, n).to_laurent();
        prop_assert_eq!(gauge(&u, &x).unwrap(), &(&u * &x) * &u.star().unwrap());
    }

    #[test]
    fn eigen_identity(seed in any::<u64>(), n in 2usize..=3) {
        let mut r = rng(seed);
        let g = sample::unitary_loop(&mut r, n, 1);
        for k in 0..n {
            prop_assert!(eigen_identity_holds(&g, k, 3).unwrap());
        }
    }

    #[test]
    fn barycentric_gauge_equivariance(seed in any::<u64>(), n in 2usize..=3) {
        let mut r = rng(seed);
        let g = sample::unitary_loop(&mut r, n, 1);
        let h = sample::unitary_loop(&mut r, n, 1);
        let types: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.6)).collect();
        prop_assume!(!types.is_empty());
        let w: Vec<(usize, BigRational)> = types.iter().copied().zip(sample::weights(&mut r, types.len())).collect();
        let x = barycentric_affine_veronese(&g, &w).unwrap();
        prop_assert!(in_x(&x));
        prop_assert_eq!(barycentric_affine_veronese(&(&h * &g), &w).unwrap(), gauge(&h, &x).unwrap());
        if let [(k, _)] = w.as_slice() {
            prop_assert_eq!(x, affine_veronese_vertex(&g, *k).unwrap());
        }
    }
}

#[test]
fn equal_weights_on_the_standard_chamber() {
    for n in 2..=4 {
        let w: Vec<(usize, BigRational)> = (0..n).map(|k| (k, q(1, n as i64))).collect();
        let x = barycentric_affine_veronese(&LaurentMatrix::identity(n), &w).unwrap();
        let mut expect = LaurentMatrix::zero(n);
        for k in 0..n {
            expect = &expect + &pi_tls(n, k);
        }
        let expect = expect.scale(&LaurentPoly::constant(GaussRat::from_frac(1, n as i64)));
        assert_eq!(x, expect);
        assert!(x.is_constant());
    }
}

#[test]
fn single_vertex_weight() {
    let mut r = rng(5);
    let g = sample::unitary_loop(&mut r, 3, 2);
    for k in 0..3 {
        let x = barycentric_affine_veronese(&g, &[(k, BigRational::one())]).unwrap();
        assert_eq!(x, affine_veronese_vertex(&g, k).unwrap());
    }
}

#[test]
fn affine_veronese_separates_vertices() {
    let mut r = rng(9);
    for n in 2..=3 {
        let mut verts = Vec::new();
        for _ in 0..4 {
            let g = sample::unitary_loop(&mut r, n, 1);
            // a diagonal phase stabilizes every standard lattice E_k
            let ph = LaurentMatrix::diag((0..n).map(|i| LaurentPoly::constant(if i == 0 { GaussRat::i() } else { GaussRat::one() })).collect());
            let gh = &g * &ph;
            for k in 0..n {
                for h in [&g, &gh] {
                    let class = vertex_lattice(h, k).class();
                    verts.push((class, affine_veronese_vertex(h, k).unwrap()));
                }
            }
        }
        for (c1, x1) in &verts {
            for (c2, x2) in &verts {
                assert_eq!(c1 == c2, x1 == x2);
            }
        }
    }
}

#[test]
fn caveat_reproduction() {
    assert!(caveat_check(2, 8));
    assert!(caveat_check(3, 8));
    assert!(caveat_check_scaled(3, &q(2, 1), 8));
    for n in 2..=3 {
        for k in 1..n {
            let (lambda, f) = truncated_eigenvector(&pi_tls(n, k), 8).unwrap();
            // the kernel vector really is an eigenvector
            let x = pi_tls(n, k);
            let xf = x.apply(&f);
            for (fi, xi) in f.iter().zip(&xf) {
                assert_eq!(&fi.z_d_dz() - xi, fi.scale(&GaussRat::from_rational(lambda.clone())));
            }
        }
    }
}
