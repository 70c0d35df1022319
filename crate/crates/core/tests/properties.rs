use proptest::prelude::*;
use tricorr::field::{FieldCtx, FieldElement};
use tricorr::seq::CorrelationSweep;
use tricorr::{CorrelationDistribution, SeqParams};

fn gf(m: u32) -> FieldCtx {
    FieldCtx::new(m, None).unwrap()
}

proptest! {
    #[test]
    fn field_axioms(m in 2u32..=16, x in any::<u32>(), y in any::<u32>(), z in any::<u32>()) {
        let f = gf(m);
        let mask = (1u32 << m) - 1;
        let (x, y, z) = (FieldElement(x & mask), FieldElement(y & mask), FieldElement(z & mask));
        prop_assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
        prop_assert_eq!(f.mul(x, y + z), f.mul(x, y) + f.mul(x, z));
        prop_assert_eq!(f.mul(x, y), f.mul(y, x));
        if !x.is_zero() {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn pow_adds_exponents(m in 2u32..=16, x in 1u32.., a in 0u64..1_000_000, b in 0u64..1_000_000) {
        let f = gf(m);
        let x = FieldElement(x & ((1 << m) - 1)).max(FieldElement::ONE);
        prop_assert_eq!(f.mul(f.pow(x, a), f.pow(x, b)), f.pow(x, a + b));
        prop_assert_eq!(f.frobenius(x, 1), f.square(x));
    }

    #[test]
    fn trace_linear(m in 2u32..=20, x in any::<u32>(), y in any::<u32>()) {
        let f = gf(m);
        let mask = (1u32 << m) - 1;
        let (x, y) = (FieldElement(x & mask), FieldElement(y & mask));
        prop_assert_eq!(f.abs_trace(x + y), f.abs_trace(x) ^ f.abs_trace(y));
        prop_assert_eq!(f.abs_trace(f.square(x)), f.abs_trace(x));
    }

    #[test]
    fn any_partition_merges_to_full(cuts in prop::collection::vec(0u64..1023, 0..12)) {
        let (ctx, params) = SeqParams::setup(5, 1, None).unwrap();
        let sweep = CorrelationSweep::for_params(&ctx, &params);
        let mut bounds = cuts;
        bounds.extend([0, params.n()]);
        bounds.sort_unstable();
        let merged = bounds
            .windows(2)
            .map(|w| sweep.distribution_over(&(w[0]..w[1]).collect::<Vec<_>>()).unwrap())
            .fold(CorrelationDistribution::new(), CorrelationDistribution::merge);
        prop_assert_eq!(merged, sweep.full_distribution());
    }

    #[test]
    fn correlations_are_odd(tau in 0u64..16383) {
        let (ctx, params) = SeqParams::setup(7, 3, None).unwrap();
        let c = CorrelationSweep::for_params(&ctx, &params).correlation(tau).unwrap();
        prop_assert_eq!(c.rem_euclid(2), 1);
        prop_assert!([-1, 255, -257].contains(&c));
    }
}
