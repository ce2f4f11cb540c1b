use crate::model::{Labelling, TruthDegree};

use super::{Formula, LogicError, LogicSystem};

/// Supplies the degree of `T(body)` in the labelling being evaluated.
///
/// Typicality depends on the whole set of labellings, so its values are
/// computed elsewhere and injected here.
pub trait TypicalityContext {
    fn typicality(&self, body: &Formula) -> Option<TruthDegree>;
}

/// Truth-functional evaluation of `formula` in one labelling.
///
/// `label_index` is this labelling's canonical position in Σ, used by
/// `LabelAtom`; `None` means the labelling is not a member of any Σ.
pub fn eval_plain(
    labelling: &Labelling,
    formula: &Formula,
    logic: LogicSystem,
    typ_context: Option<&dyn TypicalityContext>,
    label_index: Option<usize>,
) -> Result<TruthDegree, LogicError> {
    let n = labelling.resolution();
    let eval = |f: &Formula| eval_plain(labelling, f, logic, typ_context, label_index);
    Ok(match formula {
        Formula::Arg(a) => labelling
            .get(*a)
            .ok_or_else(|| LogicError::UnknownArgument(a.to_string()))?,
        Formula::Top => TruthDegree::one(n),
        Formula::Bot => TruthDegree::zero(n),
        Formula::Neg(f) => logic.not(eval(f)?),
        Formula::And(f, g) => logic.and(eval(f)?, eval(g)?),
        Formula::Or(f, g) => logic.or(eval(f)?, eval(g)?),
        Formula::Impl(f, g) => logic.implies(eval(f)?, eval(g)?),
        Formula::Typ(body) => typ_context
            .and_then(|ctx| ctx.typicality(body))
            .ok_or(LogicError::MissingTypicalityContext)?,
        Formula::LabelAtom(i) => {
            let here = label_index.ok_or(LogicError::MissingLabelIndex(*i))?;
            if here == *i {
                TruthDegree::one(n)
            } else {
                TruthDegree::zero(n)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ArgId, WeightedGraph};
    use proptest::prelude::*;

    fn labelling(values: &[u32], n: u32) -> Labelling {
        Labelling::from_numerators(values.to_vec(), n).unwrap()
    }

    fn a() -> Formula {
        Formula::Arg(ArgId(0))
    }

    fn b() -> Formula {
        Formula::Arg(ArgId(1))
    }

    #[test]
    fn goedel_fixtures() {
        let l = labelling(&[4, 2], 5);
        let v = eval_plain(
            &l,
            &Formula::implies(a(), b()),
            LogicSystem::Goedel,
            None,
            None,
        )
        .unwrap();
        assert_eq!(v.numerator(), 2);
        let l = labelling(&[2, 0], 5);
        let v = eval_plain(
            &l,
            &Formula::and(a(), Formula::not(a())),
            LogicSystem::Goedel,
            None,
            None,
        )
        .unwrap();
        assert_eq!(v.numerator(), 2);
    }

    #[test]
    fn lukasiewicz_implication() {
        let l = labelling(&[4, 2], 5);
        let v = eval_plain(
            &l,
            &Formula::implies(a(), b()),
            LogicSystem::Lukasiewicz,
            None,
            None,
        )
        .unwrap();
        assert_eq!(v.numerator(), 3);
    }

    #[test]
    fn constants_and_errors() {
        let l = labelling(&[1, 1], 3);
        for logic in LogicSystem::ALL {
            assert!(eval_plain(&l, &Formula::Top, logic, None, None)
                .unwrap()
                .is_one());
            assert!(eval_plain(&l, &Formula::Bot, logic, None, None)
                .unwrap()
                .is_zero());
        }
        let unknown = Formula::Arg(ArgId(7));
        assert!(matches!(
            eval_plain(&l, &unknown, LogicSystem::Goedel, None, None),
            Err(LogicError::UnknownArgument(_))
        ));
        let typ = Formula::typ(a()).unwrap();
        assert_eq!(
            eval_plain(&l, &typ, LogicSystem::Goedel, None, None),
            Err(LogicError::MissingTypicalityContext)
        );
        assert_eq!(
            eval_plain(&l, &Formula::LabelAtom(0), LogicSystem::Goedel, None, None),
            Err(LogicError::MissingLabelIndex(0))
        );
    }

    #[test]
    fn label_atom_is_indicator() {
        let l = labelling(&[0, 0], 2);
        let at = |here| {
            eval_plain(
                &l,
                &Formula::LabelAtom(3),
                LogicSystem::Goedel,
                None,
                Some(here),
            )
            .unwrap()
        };
        assert!(at(3).is_one());
        assert!(at(2).is_zero());
    }

    struct Fixed(TruthDegree);

    impl TypicalityContext for Fixed {
        fn typicality(&self, _: &Formula) -> Option<TruthDegree> {
            Some(self.0)
        }
    }

    #[test]
    fn typicality_uses_context() {
        let g = WeightedGraph::build(&["A", "B"], &[]).unwrap();
        let l = labelling(&[2, 1], 2);
        let f = Formula::implies(Formula::typ(Formula::arg(&g, "A").unwrap()).unwrap(), b());
        let ctx = Fixed(TruthDegree::zero(2));
        let v = eval_plain(&l, &f, LogicSystem::Goedel, Some(&ctx), None).unwrap();
        assert!(v.is_one());
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            (0usize..3).prop_map(|i| Formula::Arg(ArgId(i))),
            Just(Formula::Top),
            Just(Formula::Bot),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::and(f, g)),
                (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::or(f, g)),
                (inner.clone(), inner).prop_map(|(f, g)| Formula::implies(f, g)),
            ]
        })
    }

    proptest! {
        #[test]
        fn pointwise_laws(
            f in arb_formula(),
            g in arb_formula(),
            n in 1u32..7,
            raw in proptest::collection::vec(0u32..7, 3),
            luk in any::<bool>(),
        ) {
            let logic = if luk { LogicSystem::Lukasiewicz } else { LogicSystem::Goedel };
            let l = labelling(&raw.iter().map(|v| v % (n + 1)).collect::<Vec<_>>(), n);
            let ev = |h: &Formula| eval_plain(&l, h, logic, None, None).unwrap();
            let (vf, vg) = (ev(&f), ev(&g));
            prop_assert_eq!(ev(&Formula::not(f.clone())).ratio(), crate::logic::Rational::from_integer(1) - vf.ratio());
            let vand = ev(&Formula::and(f.clone(), g.clone()));
            let vor = ev(&Formula::or(f.clone(), g.clone()));
            prop_assert_eq!(vand.ratio() + vor.ratio(), vf.ratio() + vg.ratio());
            prop_assert!(vand <= vf && vf <= vor);
        }
    }
}
