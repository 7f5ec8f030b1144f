use licci_core::exactfield::SparseRow;
use licci_core::{
    betti_table, classify, invariants, rank, rank_over, verify_direct_link, BigIntegers, FieldSpec, Ideal,
    MachineIntegers, Mono, RuleId, SmallIdeal, SparseMatrix, Status, WideIntegers,
};
use licci_core::{Monomial, Ring};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn ideal(n: usize, max_exp: u16, max_gens: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_map(move |g| Ideal::new(Ring::standard(n), g.into_iter().map(Monomial::new)))
}

fn artinian(n: usize) -> impl Strategy<Value = Ideal> {
    (prop::collection::vec(1u16..=3, n), ideal(n, 2, 4)).prop_map(move |(a, extra)| {
        let pure = (0..n).map(|i| Monomial::pure_power(n, i, a[i]));
        Ideal::new(Ring::standard(n), pure.chain(extra.gens().iter().cloned()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn betti_tables_start_with_the_generators(i in ideal(4, 3, 5)) {
        prop_assume!(i.is_proper() && !i.is_zero());
        let t = betti_table(&i, Q).unwrap();
        prop_assert_eq!(t.get(0, 0), 1);
        prop_assert_eq!(t.total(0), 1);
        for d in 1..=12 {
            let count = i.gens().iter().filter(|g| g.degree() == d).count();
            prop_assert_eq!(t.get(1, d), count);
        }
        prop_assert!(t.entries().all(|((i, j), _)| j >= i));
    }

    #[test]
    fn cohen_macaulay_regularity_sits_in_the_last_column(i in ideal(4, 2, 5)) {
        prop_assume!(i.is_proper() && !i.is_zero());
        let t = betti_table(&i, Q).unwrap();
        let inv = invariants(&t, &i).unwrap();
        if inv.is_cm {
            prop_assert_eq!(inv.reg, t.last_column_reg());
        }
    }

    #[test]
    fn colon_absorbs_members(a in ideal(3, 3, 4), b in ideal(3, 2, 3), pick in 0usize..4) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let f = a.gens()[pick % a.num_gens()].clone();
        let with_f = b.sum(&Ideal::new(Ring::standard(3), [f]));
        prop_assert_eq!(a.colon(&b).unwrap(), a.colon(&with_f).unwrap());
    }

    #[test]
    fn verdicts_are_well_formed(i in ideal(4, 2, 5)) {
        prop_assume!(i.is_proper() && !i.is_zero());
        let v = classify(&i, Q).unwrap();
        if v.status != Status::Unknown {
            prop_assert!(!v.rules.is_empty());
        }
        let by_iteration = v.deciding_rule() == Some(RuleId::R6);
        prop_assert_eq!(v.hu_trace.is_some(), by_iteration);
        if let Some(trace) = &v.hu_trace {
            let last = &trace.last().unwrap().summary;
            match v.status {
                Status::Licci => prop_assert!(last.starts_with("complete intersection") || last.starts_with("principal sharp part")),
                Status::NotLicci => prop_assert!(last.starts_with("fixpoint")),
                Status::Unknown => prop_assert!(false, "the iteration always decides"),
            }
        }
    }

    #[test]
    fn linked_ideals_share_height(i in artinian(3), lift in prop::collection::vec(0u16..=1, 3)) {
        prop_assume!(i.is_proper());
        let n = 3;
        let seq: Vec<Mono> = (0..n)
            .map(|v| {
                let top = i.gens().iter().map(|g| g.exponent(v)).max().unwrap();
                Monomial::pure_power(n, v, top + lift[v])
            })
            .collect();
        let c = Ideal::new(Ring::standard(n), seq.clone());
        prop_assume!(c.is_subset_of(&i));
        let j = c.colon(&i).unwrap();
        // c = I links to S, which is not a link
        prop_assume!(j.is_proper());
        let report = verify_direct_link(&i, &j, &seq).unwrap();
        prop_assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
        prop_assert_eq!(c.height().unwrap(), i.height().unwrap());
        prop_assert_eq!(j.height().unwrap(), i.height().unwrap());
    }

    #[test]
    fn narrow_exponents_give_the_same_tables(i in ideal(4, 3, 5)) {
        prop_assume!(i.is_proper() && !i.is_zero());
        let small = SmallIdeal::parse(&i.to_string(), i.ring()).unwrap();
        prop_assert_eq!(betti_table(&small, Q).unwrap(), betti_table(&i, Q).unwrap());
    }

    #[test]
    fn integer_widths_agree(m in prop::collection::vec(prop::collection::vec(-9i64..=9, 5), 0..6)) {
        let rows = || -> Vec<SparseRow<i64>> {
            m.iter()
                .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, &v)| (c as u32, v)).collect())
                .collect()
        };
        let machine = rank_over(&MachineIntegers::default(), 5, rows());
        let wide = rank_over(&WideIntegers::default(), 5, rows().into_iter().map(|r| r.into_iter().map(|(c, v)| (c, v as i128)).collect()));
        let big = rank_over(&BigIntegers::default(), 5, rows().into_iter().map(|r| r.into_iter().map(|(c, v)| (c, v.into())).collect()));
        let entries = m.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))).filter(|e| e.2 != 0).collect();
        let q = rank(&SparseMatrix::new(m.len(), 5, entries).unwrap(), Q);
        prop_assert_eq!(big, Some(q));
        prop_assert_eq!(wide, Some(q));
        if let Some(r) = machine {
            prop_assert_eq!(r, q);
        }
    }
}
