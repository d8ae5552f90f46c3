use geomseq_core::correlate::{autocorrelation_profile, cross_correlation, cross_correlation_profile};
use geomseq_core::gf::{ExtFieldContext, PrimeFieldElement};
use geomseq_core::lincomp::{
    berlekamp_massey_symbols, minimal_poly_gcd_symbols, multiplicity_at_one,
    regenerate, DensePoly,
};
use geomseq_core::seqgen::{
    deinterleave, from_binary, from_text, interleave, left_cyclic_shift, minimal_period, to_binary,
    to_text, NtuFamily, SymbolSequence,
};
use geomseq_core::theorems::ntu_acf_profile_predict;
use proptest::prelude::*;

mod common;
use common::{complement_case, ml1_by_division};

fn symbols(ell: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..ell, 1..=max_len)
}

fn binary_seq(max_len: usize) -> impl Strategy<Value = SymbolSequence> {
    symbols(2, max_len).prop_map(|s| SymbolSequence::from_symbols(s, 2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bm_matches_gcd(ell in prop::sample::select(vec![2u32, 3]), seed in symbols(3, 512)) {
        let s: Vec<u32> = seed.into_iter().map(|v| v % ell).collect();
        let bm = berlekamp_massey_symbols(&s, ell).unwrap();
        let gcd = minimal_poly_gcd_symbols(&s, ell).unwrap();
        prop_assert_eq!(bm.linear_complexity, gcd.linear_complexity);
        prop_assert_eq!(&bm.minimal_poly, &gcd.minimal_poly);
        prop_assert_eq!(gcd.minimal_poly.degree(), Some(gcd.linear_complexity));
        // the minimal polynomial divides x^N - 1
        let xn = DensePoly::x_pow_minus_one(ell, s.len());
        prop_assert!(xn.div_rem(&gcd.minimal_poly).unwrap().1.is_zero());
        // and regenerates the sequence from its first L terms
        let doubled: Vec<u32> = s.iter().chain(&s).copied().collect();
        prop_assert_eq!(regenerate(&gcd.minimal_poly, &doubled, doubled.len()), doubled);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplicity_matches_division(ell in prop::sample::select(vec![2u32, 3, 5]), raw in symbols(5, 80), k in 0usize..6) {
        let coeffs: Vec<u32> = raw.into_iter().map(|v| v % ell).collect();
        let base = DensePoly::new(ell, coeffs).unwrap();
        let x_minus_one = DensePoly::new(ell, vec![ell - 1, 1]).unwrap();
        let f = (0..k).fold(base, |acc, _| acc.mul(&x_minus_one));
        prop_assert_eq!(multiplicity_at_one(&f), ml1_by_division(&f));
    }

    #[test]
    fn complement_lemma(ell in prop::sample::select(vec![2u32, 3]), raw in symbols(3, 96), a in 1u32..3) {
        let t: Vec<u32> = raw.into_iter().map(|v| v % ell).collect();
        let a = if ell == 2 { 1 } else { a };
        let case = complement_case(&t, ell, a);
        prop_assert_eq!(case.lbar, case.expected());
    }

    #[test]
    fn correlation_sum_identity(s in binary_seq(300)) {
        let profile = autocorrelation_profile(&s).unwrap();
        let total: i64 = profile.values.iter().sum();
        let bias: i64 = s.symbols().iter().map(|&b| if b == 0 { 1 } else { -1 }).sum();
        prop_assert_eq!(total, bias * bias);
        prop_assert_eq!(profile.values[0], s.period() as i64);
    }

    #[test]
    fn correlation_shift_covariance(pair in (1usize..200).prop_flat_map(|n| (
        prop::collection::vec(0u32..2, n),
        prop::collection::vec(0u32..2, n),
        0..n,
    ))) {
        let (a, b, k) = pair;
        let a = SymbolSequence::from_symbols(a, 2).unwrap();
        let b = SymbolSequence::from_symbols(b, 2).unwrap();
        let base = cross_correlation_profile(&a, &b).unwrap().values;
        let shifted = cross_correlation_profile(&a, &left_cyclic_shift(&b, k)).unwrap().values;
        let n = base.len();
        for tau in 0..n {
            prop_assert_eq!(shifted[tau], base[(tau + k) % n]);
            prop_assert_eq!(base[tau], cross_correlation(&a, &b, tau as i64).unwrap());
        }
        let both = cross_correlation_profile(&left_cyclic_shift(&a, k), &left_cyclic_shift(&b, k)).unwrap().values;
        prop_assert_eq!(both, base);
    }

    #[test]
    fn interleave_roundtrip(family in (1usize..5, 1usize..40).prop_flat_map(|(t, n)| {
        prop::collection::vec(prop::collection::vec(0u32..2, n), t)
    })) {
        let seqs: Vec<SymbolSequence> = family
            .into_iter()
            .map(|s| SymbolSequence::from_symbols(s, 2).unwrap())
            .collect();
        let u = interleave(&seqs).unwrap();
        let back = deinterleave(&u, seqs.len()).unwrap();
        for (x, y) in back.iter().zip(&seqs) {
            prop_assert_eq!(x.symbols(), y.symbols());
        }
    }

    #[test]
    fn serialization_roundtrip(s in binary_seq(300)) {
        let text = from_text(&to_text(&s)).unwrap();
        let bin = from_binary(&to_binary(&s).unwrap()).unwrap();
        prop_assert_eq!(text.symbols(), s.symbols());
        prop_assert_eq!(bin.symbols(), s.symbols());
    }

    #[test]
    fn poly_hex_roundtrip(ell in prop::sample::select(vec![2u32, 3, 7, 11]), raw in symbols(11, 70)) {
        let f = DensePoly::new(ell, raw.into_iter().map(|v| v % ell).collect()).unwrap();
        prop_assert_eq!(DensePoly::from_hex(&f.to_hex()).unwrap(), f.clone());
        prop_assert_eq!(DensePoly::parse_sparse(ell, &f.to_string()).unwrap(), f);
    }
}

fn small_fields() -> Vec<(u64, usize)> {
    vec![(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2), (13, 2)]
}

#[test]
fn trace_is_linear_and_frobenius_invariant() {
    for (p, m) in small_fields() {
        let ctx = ExtFieldContext::new(p, m).unwrap();
        let omega = ctx.omega();
        let elems: Vec<_> = (0..20).map(|i| ctx.pow(&omega, i * 7 + 3)).collect();
        for x in &elems {
            assert_eq!(ctx.trace(x), ctx.trace_linear(x));
            assert_eq!(ctx.trace(&ctx.pow(x, p)), ctx.trace(x), "Tr(x^p) = Tr(x)");
            for y in &elems {
                for c in 0..p as i64 {
                    let c = PrimeFieldElement::new(c, p as u32);
                    let lhs = ctx.trace(&ctx.add(&ctx.scale(c, x), y));
                    assert_eq!(lhs, c * ctx.trace(x) + ctx.trace(y));
                }
            }
        }
    }
}

#[test]
fn m_sequence_is_balanced_with_full_period() {
    for (p, m) in small_fields() {
        let ctx = ExtFieldContext::new(p, m).unwrap();
        let fam = NtuFamily::new(ctx, 2, 1).unwrap();
        let r = fam.m_sequence();
        assert_eq!(minimal_period(r), r.len());
        let q = p.pow(m as u32 - 1) as usize;
        for v in 0..p as u32 {
            let expected = if v == 0 { q - 1 } else { q };
            assert_eq!(r.iter().filter(|&&x| x == v).count(), expected);
        }
    }
}

fn prime_divisors(n: u64) -> Vec<u32> {
    (2..=n).filter(|d| n.is_multiple_of(*d) && (2..*d).all(|k| d % k != 0)).map(|d| d as u32).collect()
}

#[test]
fn periods_are_minimal() {
    for (p, m) in small_fields() {
        for ell in prime_divisors(p - 1) {
            for a in 0..p as u32 {
                let fam = NtuFamily::new(ExtFieldContext::new(p, m).unwrap(), ell, a).unwrap();
                let t = fam.generalized_ntu();
                let s = fam.short_companion();
                if p == 3 && a == 2 {
                    // ρ(1) = ρ(2) = 0: t is constant and T repeats after ν
                    assert!(s.symbols().iter().all(|&v| v == 0));
                    assert_eq!(minimal_period(t.symbols()) as u64, fam.nu());
                    continue;
                }
                assert_eq!(minimal_period(t.symbols()), fam.long_period(), "p={p} m={m} ell={ell} A={a}");
                assert_eq!(minimal_period(s.symbols()), fam.short_period());
            }
        }
    }
}

#[test]
fn same_class_gives_shifted_sequences() {
    for p in [3u64, 5, 7, 11, 13] {
        for m in [2usize, 3] {
            for ell in prime_divisors(p - 1) {
                let fams: Vec<NtuFamily> = (1..p as u32)
                    .map(|a| NtuFamily::new(ExtFieldContext::new(p, m).unwrap(), ell, a).unwrap())
                    .collect();
                for f1 in &fams {
                    for f2 in fams.iter().filter(|f| f.params().k == f1.params().k) {
                        let (t1, t2) = (f1.generalized_ntu(), f2.generalized_ntu());
                        let n = t1.period();
                        assert!(
                            (0..n).any(|e| left_cyclic_shift(&t1, e).symbols() == t2.symbols()),
                            "p={p} m={m} ell={ell} A={} vs {}",
                            f1.params().a,
                            f2.params().a
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn complement_correlation_is_negated() {
    for (p, m) in small_fields() {
        for a in 1..p as u32 {
            let fam = NtuFamily::new(ExtFieldContext::new(p, m).unwrap(), 2, a).unwrap();
            let t = fam.generalized_ntu();
            let r = autocorrelation_profile(&t).unwrap().values;
            let cross = cross_correlation_profile(&t, &fam.complement().unwrap()).unwrap().values;
            assert!(r.iter().zip(&cross).all(|(x, y)| *x == -*y));
        }
    }
}

#[test]
fn ntu_autocorrelation_distribution() {
    let mut cases = 0;
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        for m in 2..=7usize {
            if p.pow(m as u32) - 1 > 3000 {
                break;
            }
            for a in 1..p as u32 {
                let fam = NtuFamily::new(ExtFieldContext::new(p, m).unwrap(), 2, a).unwrap();
                let measured = autocorrelation_profile(&fam.generalized_ntu()).unwrap().values;
                assert_eq!(measured, ntu_acf_profile_predict(&fam).unwrap(), "p={p} m={m} A={a}");
                cases += 1;
            }
        }
    }
    assert!(cases > 100);
}

#[test]
fn complement_lemma_hits_every_case() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut hits = [[0usize; 3]; 2];
    let mut unsaturated = 0;
    for _ in 0..3000 {
        let ell = if rng.gen_bool(0.5) { 2 } else { 3 };
        let n = rng.gen_range(1..=48usize);
        let t: Vec<u32> = (0..n).map(|_| rng.gen_range(0..ell)).collect();
        let a = rng.gen_range(1..ell);
        let c = complement_case(&t, ell, a);
        assert_eq!(c.lbar, c.expected(), "ℓ={ell} a={a} T={t:?}");
        if ell == 2 && c.case == 1 {
            assert!(c.bar_saturates);
        }
        if c.case == 1 && !c.bar_saturates {
            unsaturated += 1;
        }
        hits[(ell == 3) as usize][c.case] += 1;
    }
    assert!(hits.iter().flatten().all(|&h| h > 0), "{hits:?}");
    // the stated case 2 really does fail for ℓ = 3 on some inputs
    assert!(unsaturated > 0);
}
