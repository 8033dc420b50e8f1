//! Property-based tests for the group axioms, arithmetic identities and
//! the law parser.

use proptest::prelude::*;

use grouplaw_core::law::{parse_law, Atom, Factor, Word};
use grouplaw_core::subgroup::closure;
use grouplaw_core::{catalog, Caps, FiniteGroup};

fn spec_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..=16).prop_map(|n| format!("C{n}")),
        (1usize..=8).prop_map(|n| format!("D{n}")),
        (1usize..=4).prop_map(|n| format!("S{n}")),
        (1usize..=4).prop_map(|n| format!("A{n}")),
        Just("Q8".to_string()),
        Just("Heis3".to_string()),
        ((2usize..=4), (2usize..=6)).prop_map(|(a, b)| format!("C{a}xC{b}")),
    ]
}

fn make(spec: &str) -> FiniteGroup {
    catalog::make(spec, &Caps::default()).unwrap()
}

proptest! {
    #[test]
    fn catalog_groups_satisfy_the_axioms(spec in spec_strategy()) {
        make(&spec).check_axioms().unwrap();
    }

    #[test]
    fn powers_are_additive(spec in spec_strategy(), seed in any::<usize>(),
                           j in -12i64..=12, k in -12i64..=12) {
        let g = make(&spec);
        let a = seed % g.order();
        prop_assert_eq!(g.mul(g.power(a, j), g.power(a, k)), g.power(a, j + k));
        prop_assert_eq!(g.power(g.power(a, j), k), g.power(a, j * k));
    }

    #[test]
    fn inverses_are_two_sided_and_involutive(spec in spec_strategy(), seed in any::<usize>()) {
        let g = make(&spec);
        let a = seed % g.order();
        prop_assert_eq!(g.mul(a, g.inverse(a)), 0);
        prop_assert_eq!(g.mul(g.inverse(a), a), 0);
        prop_assert_eq!(g.inverse(g.inverse(a)), a);
    }

    #[test]
    fn element_orders_divide_the_group_order(spec in spec_strategy(), seed in any::<usize>()) {
        let g = make(&spec);
        let a = seed % g.order();
        let k = g.element_order(a);
        prop_assert!(k >= 1 && g.order() % k == 0);
        prop_assert_eq!(g.power(a, k as i64), 0);
        prop_assert_eq!(g.exponent() % k, 0);
    }

    #[test]
    fn closure_contains_its_seed_and_is_idempotent(
        spec in spec_strategy(),
        seeds in prop::collection::vec(any::<usize>(), 0..4),
        extra in any::<usize>(),
    ) {
        let g = make(&spec);
        let seeds: Vec<usize> = seeds.iter().map(|s| s % g.order()).collect();
        let h = closure(&g, &seeds);
        prop_assert!(seeds.iter().all(|&s| h.contains(s)));
        prop_assert!(h.is_subgroup(&g));
        let again = closure(&g, h.members());
        prop_assert_eq!(&again, &h);
        // Monotone in the seed.
        let mut larger = seeds.clone();
        larger.push(extra % g.order());
        let bigger = closure(&g, &larger);
        prop_assert!(h.members().iter().all(|&x| bigger.contains(x)));
    }

    #[test]
    fn direct_products_multiply_orders(a in spec_strategy(), b in spec_strategy()) {
        let caps = Caps { closure_cap: 1 << 20, ..Caps::default() };
        let (g, h) = (make(&a), make(&b));
        let p = g.direct_product(&h, &caps).unwrap();
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.is_abelian().0, g.is_abelian().0 && h.is_abelian().0);
    }
}

// A law AST strategy whose rendering re-parses unambiguously: bare variable
// factors always carry an explicit exponent != 1, so adjacent names cannot
// merge into one longer name.
fn word_strategy() -> impl Strategy<Value = Word> {
    let name = prop::string::string_regex("[a-z][a-z0-9]{0,2}").unwrap();
    let nontrivial_exp = prop_oneof![-9i64..=0, 2i64..=9];
    let var = (name, nontrivial_exp)
        .prop_map(|(n, exp)| Factor { atom: Atom::Var(n), exp });
    let leaf = prop::collection::vec(var, 0..3).prop_map(|factors| Word { factors });
    leaf.prop_recursive(2, 8, 3, |inner| {
        let compound = prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(u, v)| Atom::Commutator(u, v)),
            inner.clone().prop_map(Atom::Group),
        ];
        let factor = prop_oneof![
            (
                prop::string::string_regex("[a-z][a-z0-9]{0,2}").unwrap(),
                prop_oneof![-9i64..=0, 2i64..=9]
            )
                .prop_map(|(n, exp)| Factor { atom: Atom::Var(n), exp }),
            (compound, -9i64..=9).prop_map(|(atom, exp)| Factor { atom, exp }),
        ];
        prop::collection::vec(factor, 0..4).prop_map(|factors| Word { factors })
    })
}

proptest! {
    #[test]
    fn law_rendering_reparses_to_the_same_ast(lhs in word_strategy(), rhs in word_strategy()) {
        let text = format!("{lhs}={rhs}");
        let parsed = parse_law(&text).unwrap();
        prop_assert_eq!(&parsed.lhs, &lhs);
        prop_assert_eq!(&parsed.rhs, &rhs);
        // And rendering is a fixpoint.
        let rendered = parsed.to_string();
        let again = parse_law(&rendered).unwrap();
        prop_assert_eq!(again.to_string(), rendered);
    }
}

#[test]
fn law_corpus_round_trips() {
    let mut corpus: Vec<String> = Vec::new();
    // Exponents start at 2: `x^1` renders as a bare `x`, which would merge
    // with a following name on re-parse.
    for m in 2..=8u64 {
        for n in 2..=8u64 {
            corpus.push(format!("x^{m} y^{n} = y^{n} x^{m}"));
        }
    }
    for m in 1..=12u64 {
        corpus.push(format!("[x^{m},y^{m}]=1"));
    }
    corpus.extend(
        [
            "x=x",
            "1=1",
            "[x,y]=1",
            "[[x,y],z]=[x,[y,z]]",
            "(xy)^2=x^2y^2",
            "x^-1y^-1xy=[x,y]",
            "[x, y ] ^ 3 = 1",
            "(x(y(z)))=xyz",
        ]
        .map(String::from),
    );
    assert!(corpus.len() >= 50);
    for text in &corpus {
        let first = parse_law(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let rendered = first.to_string();
        let second = parse_law(&rendered).unwrap();
        assert_eq!(first, second, "{text} → {rendered}");
        assert_eq!(second.to_string(), rendered);
    }
}
