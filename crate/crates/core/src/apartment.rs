//! The apartment: 12 points, 36 oriented lines, 24 planes and 144 flags,
//! with the action of the Weyl group `S4 × S3` on point names.
//!
//! A point is a number in 1..=4 together with a letter in {a, b, c}. Two
//! points span a line when they differ in both coordinates; lines are
//! oriented a→b, b→c, c→a.

use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApartmentError {
    #[error("cannot parse {0:?} as a point (expected e.g. 1a)")]
    BadPoint(String),
    #[error("cannot parse {0:?} as a line (expected e.g. (1a,2b))")]
    BadLine(String),
    #[error("points {0} and {1} do not span a line")]
    NotALine(Point, Point),
    #[error("({0},{1}) runs against the orientation a→b→c→a; did you mean ({1},{0})?")]
    AntiCanonical(Point, Point),
    #[error("cannot parse {0:?} as a Weyl group element")]
    BadWeyl(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Letter {
        Self::ALL[i % 3]
    }

    pub fn as_char(self) -> char {
        (b'a' + self as u8) as char
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            _ => None,
        }
    }

    /// The letter this one points to under the orientation rule.
    pub fn next(self) -> Letter {
        Self::from_index(self.index() + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub number: u8,
    pub letter: Letter,
}

impl Point {
    /// Panics unless `number` is in 1..=4.
    pub fn new(number: u8, letter: Letter) -> Point {
        assert!((1..=4).contains(&number), "point number {number} outside 1..=4");
        Point { number, letter }
    }

    pub fn all() -> Vec<Point> {
        (1..=4).flat_map(|n| Letter::ALL.map(|l| Point::new(n, l))).collect()
    }

    fn joinable(self, o: Point) -> bool {
        self.number != o.number && self.letter != o.letter
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.number, self.letter.as_char())
    }
}

impl FromStr for Point {
    type Err = ApartmentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let mut cs = t.chars();
        match (cs.next(), cs.next(), cs.next()) {
            (Some(n @ '1'..='4'), Some(l), None) => Letter::from_char(l)
                .map(|l| Point::new(n as u8 - b'0', l))
                .ok_or_else(|| ApartmentError::BadPoint(s.into())),
            _ => Err(ApartmentError::BadPoint(s.into())),
        }
    }
}

/// A line with its canonical orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedLine {
    from: Point,
    to: Point,
}

impl OrientedLine {
    /// Line through two points, oriented by the letter rule.
    pub fn orient(p: Point, q: Point) -> Result<OrientedLine, ApartmentError> {
        if !p.joinable(q) {
            return Err(ApartmentError::NotALine(p, q));
        }
        Ok(if p.letter.next() == q.letter { OrientedLine { from: p, to: q } } else { OrientedLine { from: q, to: p } })
    }

    /// The line `(p, q)`, rejecting pairs against the orientation.
    pub fn directed(p: Point, q: Point) -> Result<OrientedLine, ApartmentError> {
        let l = Self::orient(p, q)?;
        if l.from == p {
            Ok(l)
        } else {
            Err(ApartmentError::AntiCanonical(p, q))
        }
    }

    pub fn from(&self) -> Point {
        self.from
    }

    pub fn to(&self) -> Point {
        self.to
    }

    pub fn contains(&self, p: Point) -> bool {
        self.from == p || self.to == p
    }

    /// The endpoint other than `p`.
    pub fn other(&self, p: Point) -> Option<Point> {
        if self.from == p {
            Some(self.to)
        } else if self.to == p {
            Some(self.from)
        } else {
            None
        }
    }

    /// Parallel class tag: `a->b`, `b->c` or `c->a`.
    pub fn class(&self) -> String {
        format!("{}->{}", self.from.letter.as_char(), self.to.letter.as_char())
    }

    pub fn all() -> Vec<OrientedLine> {
        let pts = Point::all();
        let set: BTreeSet<OrientedLine> = pts
            .iter()
            .flat_map(|&p| pts.iter().filter_map(move |&q| Self::orient(p, q).ok()))
            .collect();
        set.into_iter().collect()
    }

    /// File-name friendly form, e.g. `1a-2b`.
    pub fn slug(&self) -> String {
        format!("{}-{}", self.from, self.to)
    }
}

impl fmt::Display for OrientedLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.from, self.to)
    }
}

impl FromStr for OrientedLine {
    type Err = ApartmentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| ApartmentError::BadLine(s.into()))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| ApartmentError::BadLine(s.into()))?;
        Self::directed(a.parse()?, b.parse()?)
    }
}

/// Three pairwise joinable points, one per letter, stored in letter order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plane {
    points: [Point; 3],
}

impl Plane {
    pub fn new(p: Point, q: Point, r: Point) -> Option<Plane> {
        let mut pts = [p, q, r];
        pts.sort_by_key(|p| p.letter);
        let ok = pts.iter().enumerate().all(|(i, p)| p.letter.index() == i)
            && pts[0].number != pts[1].number
            && pts[1].number != pts[2].number
            && pts[0].number != pts[2].number;
        ok.then_some(Plane { points: pts })
    }

    pub fn points(&self) -> [Point; 3] {
        self.points
    }

    pub fn lines(&self) -> [OrientedLine; 3] {
        let [a, b, c] = self.points;
        [a, b, c].map(|p| {
            let q = [a, b, c][(p.letter.index() + 1) % 3];
            OrientedLine::orient(p, q).expect("plane points are joinable")
        })
    }

    pub fn contains_line(&self, l: &OrientedLine) -> bool {
        self.points.contains(&l.from) && self.points.contains(&l.to)
    }

    pub fn all() -> Vec<Plane> {
        let pts = Point::all();
        let mut set = BTreeSet::new();
        for &p in &pts {
            for &q in &pts {
                for &r in &pts {
                    set.extend(Plane::new(p, q, r));
                }
            }
        }
        set.into_iter().collect()
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.points;
        write!(f, "({a},{b},{c})")
    }
}

/// A mutually incident point, line and plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub point: Point,
    pub line: OrientedLine,
    pub plane: Plane,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.point, self.line, self.plane)
    }
}

/// An element of `W = S4 × S3`: a renaming of numbers and of letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElem {
    numbers: [u8; 4],
    letters: [Letter; 3],
}

impl WeylElem {
    pub const IDENTITY: WeylElem = WeylElem { numbers: [1, 2, 3, 4], letters: [Letter::A, Letter::B, Letter::C] };

    /// From image tables: `numbers[k-1]` is the image of `k`, `letters[l]` of letter `l`.
    pub fn from_images(numbers: [u8; 4], letters: [Letter; 3]) -> Option<WeylElem> {
        let mut n = numbers;
        n.sort_unstable();
        let mut l = letters;
        l.sort_unstable();
        (n == [1, 2, 3, 4] && l == Letter::ALL).then_some(WeylElem { numbers, letters })
    }

    pub fn number_image(&self, n: u8) -> u8 {
        self.numbers[n as usize - 1]
    }

    pub fn letter_image(&self, l: Letter) -> Letter {
        self.letters[l.index()]
    }

    /// All 144 elements.
    pub fn all() -> Vec<WeylElem> {
        let mut out = Vec::with_capacity(144);
        for n in permutations(&[1u8, 2, 3, 4]) {
            for l in permutations(&Letter::ALL) {
                out.push(WeylElem { numbers: n.clone().try_into().unwrap(), letters: l.try_into().unwrap() });
            }
        }
        out.sort();
        out
    }

    /// Composition "first `self`, then `o`", matching right actions.
    pub fn then(&self, o: &WeylElem) -> WeylElem {
        WeylElem {
            numbers: self.numbers.map(|n| o.numbers[n as usize - 1]),
            letters: self.letters.map(|l| o.letters[l.index()]),
        }
    }

    pub fn inverse(&self) -> WeylElem {
        let mut n = [0u8; 4];
        let mut l = [Letter::A; 3];
        for k in 0..4 {
            n[self.numbers[k] as usize - 1] = k as u8 + 1;
        }
        for k in 0..3 {
            l[self.letters[k].index()] = Letter::from_index(k);
        }
        WeylElem { numbers: n, letters: l }
    }

    /// Even letter permutation, i.e. line orientation preserved.
    pub fn preserves_orientation(&self) -> bool {
        self.letters[0].next() == self.letters[1]
    }

    pub fn number_part_even(&self) -> bool {
        let mut inv = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                inv += usize::from(self.numbers[i] > self.numbers[j]);
            }
        }
        inv % 2 == 0
    }

    pub fn order(&self) -> usize {
        let mut p = *self;
        let mut k = 1;
        while p != Self::IDENTITY {
            p = p.then(self);
            k += 1;
        }
        k
    }

    pub fn act_point(&self, p: Point) -> Point {
        Point { number: self.number_image(p.number), letter: self.letter_image(p.letter) }
    }

    /// Image of a line, re-oriented canonically.
    pub fn act_line(&self, l: &OrientedLine) -> OrientedLine {
        OrientedLine::orient(self.act_point(l.from), self.act_point(l.to)).expect("W preserves lines")
    }

    /// Image of `(from, to)` without re-orientation, as a point pair.
    pub fn act_pair(&self, l: &OrientedLine) -> (Point, Point) {
        (self.act_point(l.from), self.act_point(l.to))
    }

    pub fn act_plane(&self, p: &Plane) -> Plane {
        let [a, b, c] = p.points.map(|q| self.act_point(q));
        Plane::new(a, b, c).expect("W preserves planes")
    }

    pub fn act_flag(&self, f: &Flag) -> Flag {
        Flag { point: self.act_point(f.point), line: self.act_line(&f.line), plane: self.act_plane(&f.plane) }
    }

    pub fn act(&self, obj: &ApartmentObject) -> ApartmentObject {
        match obj {
            ApartmentObject::Point(p) => ApartmentObject::Point(self.act_point(*p)),
            ApartmentObject::Line(l) => ApartmentObject::Line(self.act_line(l)),
            ApartmentObject::Plane(p) => ApartmentObject::Plane(self.act_plane(p)),
            ApartmentObject::Flag(f) => ApartmentObject::Flag(self.act_flag(f)),
        }
    }

    /// Parses cycle notation such as `(1,3,4)(a,b,c)`; `1` or `()` is the identity.
    pub fn parse_cycles(s: &str) -> Result<WeylElem, ApartmentError> {
        let err = || ApartmentError::BadWeyl(s.into());
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut w = Self::IDENTITY;
        if body == "1" {
            return Ok(w);
        }
        let mut rest = body.as_str();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(err)?;
            let cyc = rest.strip_prefix('(').ok_or_else(err)?;
            let cyc = &cyc[..inner_end - 1];
            rest = &rest[inner_end + 1..];
            if cyc.is_empty() {
                continue;
            }
            let items: Vec<&str> = cyc.split(',').collect();
            let mut step = Self::IDENTITY;
            if items.iter().all(|t| matches!(t, &"1" | &"2" | &"3" | &"4")) {
                let v: Vec<u8> = items.iter().map(|t| t.parse().unwrap()).collect();
                for k in 0..v.len() {
                    step.numbers[v[k] as usize - 1] = v[(k + 1) % v.len()];
                }
            } else {
                let v: Vec<Letter> = items
                    .iter()
                    .map(|t| t.chars().next().filter(|_| t.len() == 1).and_then(Letter::from_char))
                    .collect::<Option<_>>()
                    .ok_or_else(err)?;
                for k in 0..v.len() {
                    step.letters[v[k].index()] = v[(k + 1) % v.len()];
                }
            }
            if Self::from_images(step.numbers, step.letters).is_none() {
                return Err(err());
            }
            w = w.then(&step);
        }
        Ok(w)
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::IDENTITY {
            return write!(f, "1");
        }
        let num: Vec<String> = (1..=4).map(|k| self.numbers[k - 1].to_string()).collect();
        let let_: Vec<String> = (0..3).map(|k| self.letters[k].as_char().to_string()).collect();
        let names_n: Vec<String> = (1..=4).map(|k| k.to_string()).collect();
        let names_l: Vec<String> = Letter::ALL.iter().map(|l| l.as_char().to_string()).collect();
        write!(f, "{}{}", cycle_string(&names_n, &num), cycle_string(&names_l, &let_))
    }
}

fn cycle_string(names: &[String], images: &[String]) -> String {
    let idx = |s: &String| names.iter().position(|n| n == s).unwrap();
    let mut seen = vec![false; names.len()];
    let mut out = String::new();
    for s in 0..names.len() {
        if seen[s] || idx(&images[s]) == s {
            continue;
        }
        let mut cyc = vec![names[s].clone()];
        seen[s] = true;
        let mut c = idx(&images[s]);
        while c != s {
            seen[c] = true;
            cyc.push(names[c].clone());
            c = idx(&images[c]);
        }
        out.push_str(&format!("({})", cyc.join(",")));
    }
    out
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApartmentObject {
    Point(Point),
    Line(OrientedLine),
    Plane(Plane),
    Flag(Flag),
}

/// The whole complex, each kind in canonical sorted order.
#[derive(Clone, Debug)]
pub struct Apartment {
    pub points: Vec<Point>,
    pub lines: Vec<OrientedLine>,
    pub planes: Vec<Plane>,
    pub flags: Vec<Flag>,
}

impl Apartment {
    pub fn build() -> Apartment {
        let points = Point::all();
        let lines = OrientedLine::all();
        let planes = Plane::all();
        let mut flags = Vec::new();
        for pl in &planes {
            for l in pl.lines() {
                for p in [l.from, l.to] {
                    flags.push(Flag { point: p, line: l, plane: *pl });
                }
            }
        }
        flags.sort();
        Apartment { points, lines, planes, flags }
    }

    pub fn lines_through(&self, p: Point) -> Vec<OrientedLine> {
        self.lines.iter().copied().filter(|l| l.contains(p)).collect()
    }

    pub fn planes_through(&self, l: &OrientedLine) -> Vec<Plane> {
        self.planes.iter().copied().filter(|p| p.contains_line(l)).collect()
    }

    /// Adjacency data for drawing.
    pub fn figure(&self) -> FigureData {
        FigureData {
            points: self.points.iter().map(|p| p.to_string()).collect(),
            lines: self
                .lines
                .iter()
                .map(|l| FigureEdge { from: l.from.to_string(), to: l.to.to_string(), class: l.class() })
                .collect(),
            planes: self.planes.iter().map(|p| p.points.map(|q| q.to_string())).collect(),
        }
    }
}

/// JSON figure export: points, oriented edges tagged by parallel class, planes as point triples.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FigureData {
    pub points: Vec<String>,
    pub lines: Vec<FigureEdge>,
    pub planes: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FigureEdge {
    pub from: String,
    pub to: String,
    pub class: String,
}

fn wc(s: &str) -> WeylElem {
    WeylElem::parse_cycles(s).expect("static cycle literal")
}

/// Images of the generators ᾱ, β̄, γ̄ of `K̄ = A4 × A3`.
pub fn k_generators() -> [WeylElem; 3] {
    [wc("(1,2)(3,4)"), wc("(1,2,3)"), wc("(a,b,c)")]
}

/// Breadth-first enumeration of `K̄` from its generators together with a
/// shortest word (generator indices) for each element.
pub fn k_bar_words() -> Vec<(WeylElem, Vec<usize>)> {
    let gens = k_generators();
    let mut seen: HashMap<WeylElem, Vec<usize>> = HashMap::new();
    let mut order = vec![WeylElem::IDENTITY];
    seen.insert(WeylElem::IDENTITY, vec![]);
    let mut queue = VecDeque::from([WeylElem::IDENTITY]);
    while let Some(w) = queue.pop_front() {
        for (g, gen) in gens.iter().enumerate() {
            let n = w.then(gen);
            if !seen.contains_key(&n) {
                let mut word = seen[&w].clone();
                word.push(g);
                seen.insert(n, word);
                order.push(n);
                queue.push_back(n);
            }
        }
    }
    order.into_iter().map(|w| { let word = seen[&w].clone(); (w, word) }).collect()
}

pub fn base_line() -> OrientedLine {
    OrientedLine { from: Point::new(1, Letter::A), to: Point::new(2, Letter::B) }
}

/// The unique `k ∈ K̄` with `(1a,2b)^k = L`.
pub fn k_for_line(l: &OrientedLine) -> WeylElem {
    let base = base_line();
    k_bar_words()
        .into_iter()
        .map(|(w, _)| w)
        .find(|w| w.act_pair(&base) == (l.from, l.to))
        .expect("K̄ is transitive on oriented lines")
}

/// The translations: the order-12 group `V4 × A3`.
pub fn translations() -> Vec<WeylElem> {
    let v4 = ["1", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"].map(wc);
    let a3 = ["1", "(a,b,c)", "(a,c,b)"].map(wc);
    v4.iter().flat_map(|v| a3.iter().map(move |a| v.then(a))).collect()
}

/// The unique translation carrying `p` to `q`.
pub fn translation(p: Point, q: Point) -> WeylElem {
    translations().into_iter().find(|t| t.act_point(p) == q).expect("translations are regular on points")
}

/// The line continuing `l` beyond its end point.
pub fn continuation(l: &OrientedLine) -> OrientedLine {
    translation(l.from, l.to).act_line(l)
}

/// The 60° rotation about `1a` used to label the base star.
pub fn rotation() -> WeylElem {
    wc("(2,3,4)(b,c)")
}

/// Reduces an index in `F7^×` to 1..=6.
pub fn idx7(i: i64) -> usize {
    let r = i.rem_euclid(7) as usize;
    assert!(r != 0, "index must be nonzero mod 7");
    r
}

/// Star, hexagon and quartet data attached to a line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub line: OrientedLine,
    /// `L_1..L_6`.
    pub star: [OrientedLine; 6],
    /// `Q_1..Q_6`: the end of `L_i` other than the centre.
    pub points: [Point; 6],
    /// `l_1..l_6`.
    pub hexagon: [OrientedLine; 6],
    /// Continuations `m_1` and `m_6` of `l_1` and `l_6`.
    pub m1: OrientedLine,
    pub m6: OrientedLine,
}

/// The quartet `(l_1, m_1, l_6, m_6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quartet {
    pub l1: OrientedLine,
    pub m1: OrientedLine,
    pub l6: OrientedLine,
    pub m6: OrientedLine,
}

impl Configuration {
    /// Configuration at `(1a,2b)` from the rotation rule `L_i^ρ = −L_{3i}`.
    pub fn base() -> Configuration {
        let base = base_line();
        let rho = rotation();
        let mut star = [base; 6];
        let mut i = 1usize;
        for _ in 0..5 {
            let (p, q) = rho.act_pair(&star[i - 1]);
            let j = (3 * i) % 7;
            star[j - 1] = OrientedLine::directed(q, p).expect("rotation image reversed is canonical");
            i = j;
        }
        Self::from_star(base, star)
    }

    fn from_star(line: OrientedLine, star: [OrientedLine; 6]) -> Configuration {
        let centre = line.from;
        let points = star.map(|l| l.other(centre).expect("star lines pass through the centre"));
        let hexagon = std::array::from_fn(|k| {
            let i = k as i64 + 1;
            OrientedLine::orient(points[idx7(2 * i) - 1], points[idx7(3 * i) - 1]).expect("hexagon side")
        });
        Configuration { line, star, points, hexagon, m1: continuation(&hexagon[0]), m6: continuation(&hexagon[5]) }
    }

    /// Configuration at `l`, transported from the base line by `k_for_line(l)`.
    pub fn of(l: &OrientedLine) -> Configuration {
        let b = Self::base();
        let k = k_for_line(l);
        Configuration {
            line: *l,
            star: b.star.map(|x| k.act_line(&x)),
            points: b.points.map(|p| k.act_point(p)),
            hexagon: b.hexagon.map(|x| k.act_line(&x)),
            m1: k.act_line(&b.m1),
            m6: k.act_line(&b.m6),
        }
    }

    /// `L_i` for `i` in `F7^×`.
    pub fn big(&self, i: i64) -> OrientedLine {
        self.star[idx7(i) - 1]
    }

    /// `l_i` for `i` in `F7^×`.
    pub fn small(&self, i: i64) -> OrientedLine {
        self.hexagon[idx7(i) - 1]
    }

    pub fn q(&self, i: i64) -> Point {
        self.points[idx7(i) - 1]
    }

    pub fn quartet(&self) -> Quartet {
        Quartet { l1: self.hexagon[0], m1: self.m1, l6: self.hexagon[5], m6: self.m6 }
    }

    pub fn centre(&self) -> Point {
        self.line.from
    }
}

pub fn star(l: &OrientedLine) -> [OrientedLine; 6] {
    Configuration::of(l).star
}

pub fn hexagon(l: &OrientedLine) -> ([OrientedLine; 6], [OrientedLine; 6]) {
    let c = Configuration::of(l);
    (c.star, c.hexagon)
}

pub fn quartet(l: &OrientedLine) -> Quartet {
    Configuration::of(l).quartet()
}
