//! End-to-end acceptance checks, one test per criterion, so the harness
//! prints exactly one pass/fail line for each.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use riordan_core::cfrac::{contract_even, contract_odd, SFraction};
use riordan_core::embedding;
use riordan_core::epseq::EpSeq;
use riordan_core::gfparse;
use riordan_core::orthopoly::{InterleavedFamily, Recurrence};
use riordan_core::prodmat::{
    bidiagonal_construction, production_of, BidiagonalSpec, ProductionMatrix,
};
use riordan_core::rational::{rat, rat_int, Rat};
use riordan_core::{RiordanArray, Series, Triangle};

fn ev(text: &str, order: usize) -> Series {
    gfparse::eval(&gfparse::parse(text).unwrap(), order).unwrap()
}

fn pair(g: &str, f: &str, order: usize) -> RiordanArray {
    RiordanArray::new(ev(g, order), ev(f, order)).unwrap()
}

fn binom(n: i64, k: i64) -> Rat {
    if k < 0 || k > n {
        return rat_int(0);
    }
    let mut num = rat_int(1);
    for i in 0..k {
        num *= rat(n - i, i + 1);
    }
    num
}

fn eps(pre: &[i64], period: &[i64]) -> EpSeq<Rat> {
    EpSeq::new(
        pre.iter().map(|&v| rat_int(v)).collect(),
        period.iter().map(|&v| rat_int(v)).collect(),
    )
    .unwrap()
}

fn col(t: &Triangle, j: usize, n: usize) -> Vec<Rat> {
    (0..n).map(|i| t.entry(i, j).unwrap()).collect()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&t| rat_int(t)).collect()
}

#[test]
fn criterion_01_binomial_decomposition() {
    let r = pair("1/(1-x)", "x/(1-x)", 32);
    let d = embedding::decompose(&r).unwrap();
    for n in 0..10i64 {
        for k in 0..=n {
            assert_eq!(
                d.a.entry(n as usize, k as usize).unwrap(),
                binom(n + k, 2 * k),
                "even sub-array entry ({n}, {k})"
            );
            assert_eq!(
                d.b.entry(n as usize, k as usize).unwrap(),
                binom(n + k + 1, 2 * k + 1),
                "odd sub-array entry ({n}, {k})"
            );
        }
    }
}

#[test]
fn criterion_02_catalan_decomposition() {
    let r = pair("c", "x*c", 32);
    let d = embedding::decompose(&r).unwrap();
    assert!(d.a.g().eq_prefix(&ev("c", 32), 16));
    assert!(d.a.f().eq_prefix(&ev("x*c^2", 32), 16));
    assert!(d.b.g().eq_prefix(&ev("c^2", 32), 16));
    assert!(d.b.f().eq_prefix(&ev("x*c^2", 32), 16));

    let r_inv = r.inverse().unwrap();
    assert!(r_inv.g().eq_prefix(&ev("1-x", 32), 16));
    assert!(r_inv.f().eq_prefix(&ev("x*(1-x)", 32), 16));

    let a_inv = d.a.inverse().unwrap();
    assert!(a_inv.g().eq_prefix(&ev("1/(1+x)", 32), 16));
    assert!(a_inv.f().eq_prefix(&ev("x/(1+x)^2", 32), 16));
}

#[test]
fn criterion_03_two_weight_counter_example() {
    let spec = BidiagonalSpec::from_cycle(&[2, 3]).unwrap();
    let (production, triangle) = bidiagonal_construction(&spec, 6).unwrap();
    let expected = Triangle::from_ints(&[
        &[1],
        &[2, 1],
        &[10, 5, 1],
        &[62, 31, 7, 1],
        &[430, 215, 51, 10, 1],
        &[3194, 1597, 389, 87, 12, 1],
    ]);
    assert_eq!(triangle, expected);
    assert!(!production.is_riordan_production());

    let s = SFraction::from_cycle(&[2, 3]).unwrap();
    let moments = s.series(6);
    assert_eq!(moments.coeffs(), ints(&[1, 2, 10, 62, 430, 3194]).as_slice());
    assert_eq!(col(&triangle, 0, 6), moments.coeffs());
}

#[test]
fn criterion_04_embedding_square_root() {
    let a = pair("1/sqrt(1-4*x)", "x/(1-4*x)", 32);
    let parent = embedding::embed(&a).unwrap();
    assert!(parent.g().eq_prefix(&ev("1/sqrt(1-4*x)", 32), 16));
    assert!(parent.f().eq_prefix(&ev("x/sqrt(1-4*x)", 32), 16));
    let expected = Triangle::from_ints(&[
        &[1],
        &[2, 1],
        &[6, 4, 1],
        &[20, 16, 6, 1],
        &[70, 64, 30, 8, 1],
        &[252, 256, 140, 48, 10, 1],
    ]);
    assert_eq!(parent.triangle(6).unwrap(), expected);
}

#[test]
fn criterion_05_three_weight_pipeline() {
    let s = SFraction::from_cycle(&[2, 3, 5]).unwrap();
    let even = contract_even(&s);
    assert_eq!(s.series(20), even.series(20));

    let even_moments = Triangle::from_ints(&[
        &[1],
        &[2, 1],
        &[10, 10, 1],
        &[80, 100, 15, 1],
        &[760, 1030, 190, 22, 1],
        &[7700, 10900, 2310, 350, 30, 1],
    ]);
    assert_eq!(
        even.tridiagonal(6).unwrap().generate(6).unwrap(),
        even_moments
    );

    let odd = contract_odd(&s);
    let odd_moments = Triangle::from_ints(&[
        &[1],
        &[5, 1],
        &[40, 12, 1],
        &[380, 130, 20, 1],
        &[3850, 1410, 300, 25, 1],
        &[40400, 15520, 4060, 440, 32, 1],
    ]);
    assert_eq!(odd.tridiagonal(6).unwrap().generate(6).unwrap(), odd_moments);

    let spec = BidiagonalSpec::from_cycle(&[2, 3, 5]).unwrap();
    let expected = Triangle::from_ints(&[
        &[1],
        &[2, 1],
        &[10, 5, 1],
        &[80, 40, 10, 1],
        &[760, 380, 100, 12, 1],
        &[7700, 3850, 1030, 130, 15, 1],
    ]);
    assert_eq!(spec.array(6).unwrap(), expected);
    assert_eq!(
        embedding::interleave(&even_moments, &odd_moments).unwrap(),
        expected
    );
}

#[test]
fn criterion_06_general_weight_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0601);
    for _ in 0..5 {
        let a: i64 = rng.gen_range(1..=9);
        let b: i64 = rng.gen_range(1..=9);
        let g: i64 = rng.gen_range(1..=9);
        let s = SFraction::from_cycle(&[a, b, g]).unwrap();

        let even = contract_even(&s);
        assert_eq!(
            even.b(),
            &eps(&[a], &[b + g, a + b, a + g]).normalize(),
            "even diagonal pattern for {a},{b},{g}"
        );
        assert_eq!(
            even.c(),
            &eps(&[], &[a * b, a * g, b * g]).normalize(),
            "even sub-diagonal pattern for {a},{b},{g}"
        );

        let odd = contract_odd(&s);
        assert_eq!(
            odd.b(),
            &eps(&[], &[a + b, a + g, b + g]).normalize(),
            "odd diagonal pattern for {a},{b},{g}"
        );
        assert_eq!(
            odd.c(),
            &eps(&[], &[b * g, a * b, a * g]).normalize(),
            "odd sub-diagonal pattern for {a},{b},{g}"
        );

        // Moment series agree with direct evaluation.
        assert_eq!(even.series(16), s.series(16));
        let h = odd.series(16);
        let reconstructed = Series::one(17)
            .add(&Series::x(17).scale(&rat_int(a)).mul(&h));
        assert!(reconstructed.eq_prefix(&s.series(16), 16));
    }
}

#[test]
fn criterion_07_constant_tail_family() {
    let p = Recurrence::new(eps(&[3], &[7]), eps(&[], &[12]), rat_int(-3));
    let q = Recurrence::new(eps(&[], &[7]), eps(&[], &[12]), rat_int(-7));
    let p_variant = Recurrence::new(eps(&[4], &[7]), eps(&[], &[12]), rat_int(-4));

    assert_eq!(
        p.moment_matrix(6).unwrap(),
        Triangle::from_ints(&[
            &[1],
            &[3, 1],
            &[21, 10, 1],
            &[183, 103, 17, 1],
            &[1785, 1108, 234, 24, 1],
            &[18651, 12349, 3034, 414, 31, 1],
        ])
    );
    assert_eq!(
        q.moment_matrix(6).unwrap(),
        Triangle::from_ints(&[
            &[1],
            &[7, 1],
            &[61, 14, 1],
            &[595, 171, 21, 1],
            &[6217, 2044, 330, 28, 1],
            &[68047, 24485, 4690, 538, 35, 1],
        ])
    );
    assert_eq!(
        p_variant.moment_matrix(6).unwrap(),
        Triangle::from_ints(&[
            &[1],
            &[4, 1],
            &[28, 11, 1],
            &[244, 117, 18, 1],
            &[2380, 1279, 255, 25, 1],
            &[24868, 14393, 3364, 442, 32, 1],
        ])
    );

    let fam = InterleavedFamily::new(p.clone(), q.clone());
    assert_eq!(
        fam.moment_matrix(6).unwrap(),
        Triangle::from_ints(&[
            &[1],
            &[3, 1],
            &[21, 7, 1],
            &[183, 61, 10, 1],
            &[1785, 595, 103, 14, 1],
            &[18651, 6217, 1108, 171, 17, 1],
        ])
    );
    let fam_variant = InterleavedFamily::new(p_variant, q);
    assert_eq!(
        fam_variant.moment_matrix(6).unwrap(),
        Triangle::from_ints(&[
            &[1],
            &[4, 1],
            &[28, 7, 1],
            &[244, 61, 11, 1],
            &[2380, 595, 117, 14, 1],
            &[24868, 6217, 1279, 171, 18, 1],
        ])
    );

    let production = production_of(&fam.moment_matrix(7).unwrap()).unwrap();
    let displayed = ProductionMatrix::new(
        [
            [3, 1, 0, 0, 0, 0],
            [12, 4, 1, 0, 0, 0],
            [36, 12, 3, 1, 0, 0],
            [144, 48, 12, 4, 1, 0],
            [432, 144, 36, 12, 3, 1],
            [1728, 576, 144, 48, 12, 4],
        ]
        .iter()
        .map(|row| row.iter().map(|&v| rat_int(v)).collect())
        .collect(),
    )
    .unwrap();
    assert_eq!(production, displayed);
    let spec = BidiagonalSpec::from_cycle(&[3, 4]).unwrap();
    assert_eq!(production, spec.production(6).unwrap());

    let col1: Vec<Rat> = (0..6).map(|i| production.entry(i, 1).unwrap()).collect();
    assert_eq!(col1, ev("(1+4*x)/(1-12*x^2)", 6).coeffs());
    let col2: Vec<Rat> = (0..6).map(|i| production.entry(i, 2).unwrap()).collect();
    assert_eq!(col2, ev("x*(1+3*x)/(1-12*x^2)", 6).coeffs());
}

#[test]
fn criterion_08_reversion_identity() {
    let f = ev("x*(1-4*x)/(1-x)", 17);
    let shifted = f.reversion().unwrap().div_xpow(1).unwrap();
    assert_eq!(
        &shifted.coeffs()[..7],
        ints(&[1, 3, 21, 183, 1785, 18651, 204141]).as_slice()
    );
    let s = SFraction::from_cycle(&[3, 4]).unwrap();
    assert!(shifted.eq_prefix(&s.series(16), 16));
    let p = Recurrence::new(eps(&[3], &[7]), eps(&[], &[12]), rat_int(-3));
    let moments = p.moment_matrix(16).unwrap();
    assert_eq!(col(&moments, 0, 16), shifted.coeffs()[..16]);
}

// ---- criterion 9: randomized property suites ----------------------------

const CASES: usize = 200;

fn random_series(rng: &mut ChaCha8Rng, order: usize, unit: bool) -> Series {
    let mut coeffs: Vec<Rat> = (0..order)
        .map(|_| rat_int(rng.gen_range(-3..=3)))
        .collect();
    if unit {
        coeffs[0] = rat_int(*[-2, -1, 1, 2].iter().nth(rng.gen_range(0..4)).unwrap());
    }
    Series::from_coeffs(coeffs)
}

fn random_proper(rng: &mut ChaCha8Rng, order: usize) -> RiordanArray {
    let g = random_series(rng, order, true);
    let mut f_coeffs: Vec<Rat> = (0..order)
        .map(|_| rat_int(rng.gen_range(-3..=3)))
        .collect();
    f_coeffs[0] = rat_int(0);
    f_coeffs[1] = rat_int(*[-2, -1, 1, 2].iter().nth(rng.gen_range(0..4)).unwrap());
    RiordanArray::new(g, Series::from_coeffs(f_coeffs)).unwrap()
}

fn identity_triangle(n: usize) -> Triangle {
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = vec![rat_int(0); i + 1];
            row[i] = rat_int(1);
            row
        })
        .collect();
    Triangle::new(rows).unwrap()
}

#[test]
fn criterion_09_property_suites() {
    // Group axioms: associativity, identity, inverses.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0901);
    for _ in 0..CASES {
        let r1 = random_proper(&mut rng, 8);
        let r2 = random_proper(&mut rng, 8);
        let r3 = random_proper(&mut rng, 8);
        let left = r1.multiply(&r2).unwrap().multiply(&r3).unwrap();
        let right = r1.multiply(&r2.multiply(&r3).unwrap()).unwrap();
        assert_eq!(left.g(), right.g());
        assert_eq!(left.f(), right.f());

        let id = RiordanArray::identity(8);
        let li = id.multiply(&r1).unwrap();
        let ri = r1.multiply(&id).unwrap();
        assert_eq!((li.g(), li.f()), (r1.g(), r1.f()));
        assert_eq!((ri.g(), ri.f()), (r1.g(), r1.f()));

        let inv = r1.inverse().unwrap();
        let prod = r1.multiply(&inv).unwrap();
        assert!(prod.g().eq_prefix(id.g(), 8));
        assert!(prod.f().eq_prefix(id.f(), 8));
    }

    // Triangle of a product is the product of triangles.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0902);
    for _ in 0..CASES {
        let r1 = random_proper(&mut rng, 8);
        let r2 = random_proper(&mut rng, 8);
        let product = r1.multiply(&r2).unwrap();
        assert_eq!(
            product.triangle(6).unwrap(),
            r1.triangle(6)
                .unwrap()
                .mul(&r2.triangle(6).unwrap())
                .unwrap()
        );
    }

    // Decomposition entry identities.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0903);
    for _ in 0..CASES {
        let r = random_proper(&mut rng, 10);
        assert!(embedding::entry_identities_hold(&r, 5).unwrap());
    }

    // Embedding undoes decomposition (canonical branch: f'(0) = 1).
    let mut rng = ChaCha8Rng::seed_from_u64(0x0904);
    for _ in 0..CASES {
        let g = random_series(&mut rng, 10, true);
        let mut f_coeffs: Vec<Rat> = (0..10)
            .map(|_| rat_int(rng.gen_range(-3..=3)))
            .collect();
        f_coeffs[0] = rat_int(0);
        f_coeffs[1] = rat_int(1);
        let r = RiordanArray::new(g, Series::from_coeffs(f_coeffs)).unwrap();
        let d = embedding::decompose(&r).unwrap();
        let back = embedding::embed(&d.a).unwrap();
        assert!(back.g().eq_prefix(r.g(), 8));
        assert!(back.f().eq_prefix(r.f(), 8));
    }

    // Production matrix roundtrips, both directions.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0905);
    for _ in 0..CASES {
        let size = 6;
        let mut rows = Vec::with_capacity(size);
        for i in 0..size {
            let mut row = vec![rat_int(0); size];
            for (j, slot) in row.iter_mut().enumerate().take((i + 1).min(size)) {
                let _ = j;
                *slot = rat_int(rng.gen_range(-3..=3));
            }
            if i + 1 < size {
                row[i + 1] = rat_int(1);
            }
            rows.push(row);
        }
        let p = ProductionMatrix::new(rows).unwrap();
        let t = p.generate(size).unwrap();
        assert_eq!(production_of(&t).unwrap(), p.shrink(size - 1));

        let mut tri_rows = Vec::new();
        for i in 0..7usize {
            let mut row: Vec<Rat> = (0..i).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
            row.push(rat_int(1));
            tri_rows.push(row);
        }
        let t = Triangle::new(tri_rows).unwrap();
        let p = production_of(&t).unwrap();
        assert_eq!(p.generate(6).unwrap(), t.truncate(6));
    }

    // Contraction soundness.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0906);
    for _ in 0..CASES {
        let pre_len = rng.gen_range(0..=2);
        let period_len = rng.gen_range(1..=4);
        let pre: Vec<Rat> = (0..pre_len)
            .map(|_| rat_int(rng.gen_range(1..=9)))
            .collect();
        let period: Vec<Rat> = (0..period_len)
            .map(|_| rat_int(rng.gen_range(1..=9)))
            .collect();
        let s = SFraction::new(EpSeq::new(pre, period).unwrap()).unwrap();
        assert_eq!(contract_even(&s).series(12), s.series(12));
        let a1 = s.coeffs().get(0).clone();
        let h = contract_odd(&s).series(12);
        let rebuilt = Series::one(13).add(&Series::x(13).scale(&a1).mul(&h));
        assert!(rebuilt.eq_prefix(&s.series(12), 12));
    }

    // Moment matrix times coefficient array is the identity.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0907);
    for _ in 0..CASES {
        let b_len = rng.gen_range(1..=3);
        let c_len = rng.gen_range(1..=3);
        let b: Vec<Rat> = (0..b_len)
            .map(|_| rat_int(rng.gen_range(-4..=4)))
            .collect();
        let c: Vec<Rat> = (0..c_len)
            .map(|_| rat_int(rng.gen_range(-4..=4)))
            .collect();
        let rec = Recurrence::new(
            EpSeq::cycle(b).unwrap(),
            EpSeq::cycle(c).unwrap(),
            rat_int(rng.gen_range(-4..=4)),
        );
        let polys = rec.polynomials(6);
        let moments = rec.moment_matrix(6).unwrap();
        assert_eq!(moments.mul(&polys).unwrap(), identity_triangle(6));
    }
}
