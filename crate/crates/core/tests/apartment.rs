use lyons::apartment::{
    base_line, continuation, k_bar_words, k_for_line, quartet, star, translation, translations, Apartment,
    ApartmentError, ApartmentObject, Configuration, OrientedLine, Plane, Point, WeylElem,
};
use proptest::prelude::*;
use std::collections::{BTreeMap, HashSet};

fn p(s: &str) -> Point {
    s.parse().unwrap()
}

fn l(s: &str) -> OrientedLine {
    s.parse().unwrap()
}

fn w(s: &str) -> WeylElem {
    WeylElem::parse_cycles(s).unwrap()
}

fn weyl() -> impl Strategy<Value = WeylElem> {
    let all = WeylElem::all();
    (0..all.len()).prop_map(move |k| all[k])
}

#[test]
fn counts() {
    let a = Apartment::build();
    assert_eq!((a.points.len(), a.lines.len(), a.planes.len(), a.flags.len()), (12, 36, 24, 144));
    assert_eq!(WeylElem::all().len(), 144);
    assert_eq!(a.lines_through(p("1a")).len(), 6);
    let planes = a.planes_through(&base_line());
    assert_eq!(planes.len(), 2);
    let thirds: HashSet<String> = planes
        .iter()
        .flat_map(|pl| pl.points())
        .filter(|q| !base_line().contains(*q))
        .map(|q| q.to_string())
        .collect();
    assert_eq!(thirds, HashSet::from(["3c".to_string(), "4c".to_string()]));
}

#[test]
fn orientation() {
    assert_eq!(OrientedLine::orient(p("2b"), p("1a")).unwrap(), l("(1a,2b)"));
    assert_eq!(OrientedLine::orient(p("1a"), p("3c")).unwrap(), l("(3c,1a)"));
    assert_eq!(OrientedLine::orient(p("4c"), p("3b")).unwrap(), l("(3b,4c)"));
    assert_eq!(OrientedLine::orient(p("1a"), p("1b")), Err(ApartmentError::NotALine(p("1a"), p("1b"))));
    assert_eq!(OrientedLine::orient(p("1a"), p("2a")), Err(ApartmentError::NotALine(p("1a"), p("2a"))));
}

#[test]
fn line_parsing() {
    assert_eq!(" ( 1a , 2b ) ".parse::<OrientedLine>().unwrap(), base_line());
    let err = "(2b,1a)".parse::<OrientedLine>().unwrap_err();
    assert_eq!(err, ApartmentError::AntiCanonical(p("2b"), p("1a")));
    assert!(err.to_string().contains("did you mean (1a,2b)"));
    assert!(matches!("1a,2b".parse::<OrientedLine>(), Err(ApartmentError::BadLine(_))));
    assert!(matches!("(5a,2b)".parse::<OrientedLine>(), Err(ApartmentError::BadPoint(_))));
    for line in OrientedLine::all() {
        assert_eq!(line.to_string().parse::<OrientedLine>().unwrap(), line);
    }
}

#[test]
fn weyl_action_examples() {
    let base = base_line();
    assert_eq!(WeylElem::IDENTITY.act_line(&base), base);
    assert_eq!(w("(1,3,4)(a,b,c)").act_line(&base), l("(3b,2c)"));
    assert_eq!(w("(1,4)(2,3)(a,b,c)").act_line(&base), l("(4b,3c)"));
    let pl = Plane::new(p("1a"), p("2b"), p("3c")).unwrap();
    let obj = ApartmentObject::Plane(pl);
    assert_eq!(WeylElem::IDENTITY.act(&obj), obj);
    assert_eq!(w("(1,2,3)").to_string(), "(1,2,3)");
}

#[test]
fn k_for_line_examples() {
    assert_eq!(k_for_line(&base_line()), WeylElem::IDENTITY);
    assert_eq!(k_for_line(&l("(3b,2c)")), w("(1,3,4)(a,b,c)"));
    let images: HashSet<OrientedLine> =
        k_bar_words().iter().map(|(k, _)| k.act_line(&base_line())).collect();
    assert_eq!(images.len(), 36);
}

#[test]
fn k_bar_is_sharply_transitive_and_orientation_preserving() {
    let k = k_bar_words();
    assert_eq!(k.len(), 36);
    for (g, _) in &k {
        assert!(g.preserves_orientation() && g.number_part_even());
    }
    for line in OrientedLine::all() {
        let hits = k.iter().filter(|(g, _)| g.act_pair(&base_line()) == (line.from(), line.to())).count();
        assert_eq!(hits, 1, "{line}");
    }
}

#[test]
fn translations_form_2x2x3() {
    assert_eq!(translation(p("2c"), p("2c")), WeylElem::IDENTITY);
    assert_eq!(translation(p("1a"), p("4b")), w("(1,4)(2,3)(a,b,c)"));
    let t = translations();
    assert_eq!(t.len(), 12);
    for x in &t {
        for y in &t {
            assert_eq!(x.then(y), y.then(x));
            assert!(t.contains(&x.then(y)));
        }
    }
    let mut orders = BTreeMap::new();
    for x in &t {
        *orders.entry(x.order()).or_insert(0) += 1;
    }
    assert_eq!(orders, BTreeMap::from([(1, 1), (2, 3), (3, 2), (6, 6)]));
}

#[test]
fn continuations() {
    assert_eq!(continuation(&l("(4b,3c)")), l("(3c,4a)"));
    assert_eq!(continuation(&l("(3b,4c)")), l("(4c,3a)"));
    for line in OrientedLine::all() {
        let c = continuation(&line);
        assert_eq!(c.from(), line.to());
        let mut x = line;
        for _ in 0..6 {
            x = continuation(&x);
        }
        assert_eq!(x, line);
    }
}

#[test]
fn base_configuration() {
    let names = |ls: &[OrientedLine]| ls.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let c = Configuration::base();
    assert_eq!(names(&c.star), ["(1a,2b)", "(1a,4b)", "(3c,1a)", "(1a,3b)", "(4c,1a)", "(2c,1a)"]);
    assert_eq!(c.small(1), l("(4b,3c)"));
    assert_eq!(c.small(6), l("(3b,4c)"));
    let q = quartet(&base_line());
    assert_eq!(names(&[q.l1, q.m1, q.l6, q.m6]), ["(4b,3c)", "(3c,4a)", "(3b,4c)", "(4c,3a)"]);
}

#[test]
fn configurations_at_every_line() {
    for line in OrientedLine::all() {
        let c = Configuration::of(&line);
        assert_eq!(c.big(1), line);
        assert!(c.star.iter().all(|s| s.contains(line.from())));
        for i in 1..=6 {
            let h = c.small(i);
            assert!(h.contains(c.q(2 * i)) && h.contains(c.q(3 * i)));
        }
        assert!(OrientedLine::all().iter().any(|m| m.from() == line.to() && star(m).contains(&line)));
    }
}

#[test]
fn configuration_transport_commutes_with_k() {
    for (k, _) in k_bar_words() {
        for line in OrientedLine::all() {
            let moved = star(&line).map(|x| k.act_line(&x));
            assert_eq!(moved, star(&k.act_line(&line)));
        }
    }
}

#[test]
fn w_is_sharply_transitive_on_flags() {
    let a = Apartment::build();
    let base = a.flags[0];
    let mut seen = HashSet::new();
    for g in WeylElem::all() {
        assert!(seen.insert(g.act_flag(&base)));
    }
    assert_eq!(seen.len(), 144);
    assert!(a.flags.iter().all(|f| seen.contains(f)));
}

#[test]
fn figure_json() {
    let fig = Apartment::build().figure();
    assert_eq!(fig.points.len(), 12);
    assert_eq!(fig.lines.len(), 36);
    assert_eq!(fig.planes.len(), 24);
    let json = serde_json::to_value(&fig).unwrap();
    assert_eq!(json["lines"][0].as_object().unwrap().len(), 3);
    for class in ["a->b", "b->c", "c->a"] {
        assert_eq!(fig.lines.iter().filter(|e| e.class == class).count(), 12);
    }
}

proptest! {
    #[test]
    fn then_is_associative(a in weyl(), b in weyl(), c in weyl()) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
    }

    #[test]
    fn inverse_cancels(a in weyl()) {
        prop_assert_eq!(a.then(&a.inverse()), WeylElem::IDENTITY);
        prop_assert_eq!(a.inverse().then(&a), WeylElem::IDENTITY);
    }

    #[test]
    fn action_is_a_right_action(a in weyl(), b in weyl(), k in 0usize..36) {
        let line = OrientedLine::all()[k];
        prop_assert_eq!(a.then(&b).act_line(&line), b.act_line(&a.act_line(&line)));
        for q in Point::all() {
            prop_assert_eq!(a.then(&b).act_point(q), b.act_point(a.act_point(q)));
        }
    }

    #[test]
    fn cycle_notation_round_trip(a in weyl()) {
        prop_assert_eq!(WeylElem::parse_cycles(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn order_is_exact(a in weyl()) {
        let n = a.order();
        let mut x = WeylElem::IDENTITY;
        for k in 1..=n {
            x = x.then(&a);
            prop_assert_eq!(x == WeylElem::IDENTITY, k == n);
        }
    }
}
