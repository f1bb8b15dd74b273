use face_monoid::{ActionKind, Element, Face, FacetLabel, Gcm, IndexSet, NormalForm, WeylGroup};
use proptest::prelude::*;

fn hyp() -> WeylGroup {
    WeylGroup::new(Gcm::new(vec![vec![2, -2, -1], vec![-2, 2, 0], vec![-1, 0, 2]]).unwrap())
}

fn dec() -> WeylGroup {
    WeylGroup::new(Gcm::new(vec![vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 2]]).unwrap())
}

/// Raw data for an element: two letter strings and an index into the
/// special subsets.
type Raw = (Vec<u8>, usize, Vec<u8>);

fn raw() -> impl Strategy<Value = Raw> {
    (proptest::collection::vec(0u8..3, 0..7), 0usize..8, proptest::collection::vec(0u8..3, 0..7))
}

fn element(g: &WeylGroup, (l, t, r): &Raw) -> Element {
    let specials = g.special_subsets();
    let f = g.special_face(specials[t % specials.len()]).unwrap();
    g.make_element(&g.word_from_letters(l), &f, &g.word_from_letters(r))
}

fn face(g: &WeylGroup, (l, t, _): &Raw) -> Face {
    let specials = g.special_subsets();
    g.make_face(&g.word_from_letters(l), specials[t % specials.len()]).unwrap()
}

fn coset(g: &WeylGroup, (l, t, _): &Raw) -> FacetLabel {
    g.make_facet(&g.word_from_letters(l), IndexSet::from_bits(*t as u64).intersection(g.full()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_monoid_laws(a in raw(), b in raw(), c in raw()) {
        for g in [hyp(), dec()] {
            let (x, y, z) = (element(&g, &a), element(&g, &b), element(&g, &c));
            let m = |p: &Element, q: &Element| g.monoid_mul(p, q);
            prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
            let xi = g.monoid_inverse(&x);
            prop_assert_eq!(m(&m(&x, &xi), &x), x.clone());
            prop_assert_eq!(g.monoid_inverse(&xi), x.clone());
            let (e, f) = (m(&x, &xi), m(&y, &g.monoid_inverse(&y)));
            prop_assert_eq!(m(&e, &f), m(&f, &e));
            prop_assert!(g.orbit_type(&x).union(g.orbit_type(&y)).is_subset(g.orbit_type(&m(&x, &y))));
        }
    }

    #[test]
    fn normal_forms_rebuild_the_element(a in raw()) {
        for g in [hyp(), dec()] {
            let x = element(&g, &a);
            for nf in [NormalForm::I, NormalForm::II] {
                let (l, t, r) = g.normal_form(&x, nf);
                prop_assert_eq!(g.make_element(&l, &g.special_face(t).unwrap(), &r), x.clone());
            }
            let (s, f) = g.element_pair(&x);
            prop_assert_eq!(g.element_from_pair(&s, &f), x.clone());
        }
    }

    #[test]
    fn lattice_laws(a in raw(), b in raw(), c in raw()) {
        for g in [hyp(), dec()] {
            let (p, q, r) = (face(&g, &a), face(&g, &b), face(&g, &c));
            prop_assert_eq!(g.face_meet(&p, &g.face_meet(&q, &r)), g.face_meet(&g.face_meet(&p, &q), &r));
            prop_assert_eq!(g.face_join(&p, &g.face_join(&q, &r)), g.face_join(&g.face_join(&p, &q), &r));
            prop_assert_eq!(g.face_meet(&p, &g.face_join(&p, &q)), p.clone());
            prop_assert_eq!(g.face_contains(&p, &q), g.face_meet(&p, &q) == q);
            let w = g.word_from_letters(&c.0);
            prop_assert_eq!(g.translate_face(&w, &g.face_meet(&p, &q)), g.face_meet(&g.translate_face(&w, &p), &g.translate_face(&w, &q)));
        }
    }

    #[test]
    fn action_laws(a in raw(), b in raw(), c in raw()) {
        for g in [hyp(), dec()] {
            let (x, y, k) = (element(&g, &a), element(&g, &b), coset(&g, &c));
            for kind in ActionKind::ALL {
                prop_assert_eq!(g.act(kind, &x, &g.act(kind, &y, &k)), g.act(kind, &g.monoid_mul(&x, &y), &k));
                prop_assert_eq!(g.act(kind, &g.unit(), &k), k.clone());
            }
        }
    }

    #[test]
    fn good_actions_preserve_order(a in raw(), c in raw(), bits in any::<u64>()) {
        for g in [hyp(), dec()] {
            let x = element(&g, &a);
            let hi = coset(&g, &c);
            let lo = g.make_facet(&hi.rep, hi.jtype.union(IndexSet::from_bits(bits).intersection(g.full())));
            prop_assert!(g.complex_leq(&lo, &hi));
            for kind in [ActionKind::Good1, ActionKind::Good2] {
                prop_assert!(g.order_violation(kind, &x, &lo, &hi).is_none());
            }
        }
    }

    #[test]
    fn units_act_by_left_multiplication(l in proptest::collection::vec(0u8..3, 0..8), c in raw()) {
        for g in [hyp(), dec()] {
            let w = g.word_from_letters(&l);
            let k = coset(&g, &c);
            for kind in ActionKind::ALL {
                prop_assert_eq!(g.act(kind, &g.unit_of(&w), &k), g.make_facet(&g.mul(&w, &k.rep), k.jtype));
            }
            prop_assert_eq!(g.act(ActionKind::Good1, &g.unit_of(&w), &k), g.act(ActionKind::Good2, &g.unit_of(&w), &k));
        }
    }
}
