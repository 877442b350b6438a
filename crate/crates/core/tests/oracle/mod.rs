//! A deliberately naive second implementation of the four-letter algebra,
//! written against the printed table with integer coordinates and string
//! words. Tests compare the engine against it.

#![allow(dead_code)]

/// Coordinates over (a, b, c, d).
pub type Vec4 = [i64; 4];

pub const LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

/// Row is the left factor.
const TABLE: [[&str; 4]; 4] = [
    ["a", "b", "-d", "-c"],
    ["b", "-a", "-d", "c"],
    ["c", "d", "a", "-b"],
    ["d", "-c", "b", "-a"],
];

fn idx(c: char) -> usize {
    LETTERS.iter().position(|&l| l == c).expect("letter of A")
}

pub fn odd(c: char) -> bool {
    c == 'c' || c == 'd'
}

/// `x ∘ y` for letters, as (sign, letter).
pub fn letter_product(x: char, y: char) -> (i64, char) {
    let s = TABLE[idx(x)][idx(y)];
    match s.strip_prefix('-') {
        Some(rest) => (-1, rest.chars().next().unwrap()),
        None => (1, s.chars().next().unwrap()),
    }
}

pub fn unit(c: char) -> Vec4 {
    let mut v = [0; 4];
    v[idx(c)] = 1;
    v
}

pub fn add(x: Vec4, y: Vec4) -> Vec4 {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]
}

pub fn scale(k: i64, x: Vec4) -> Vec4 {
    x.map(|v| k * v)
}

pub fn mul(x: Vec4, y: Vec4) -> Vec4 {
    let mut out = [0; 4];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            if xi == 0 || yj == 0 {
                continue;
            }
            let (s, l) = letter_product(LETTERS[i], LETTERS[j]);
            out[idx(l)] += s * xi * yj;
        }
    }
    out
}

/// `Some(true)` odd, `Some(false)` even, `None` zero; panics if mixed.
pub fn parity(x: Vec4) -> Option<bool> {
    let even = x[0] != 0 || x[1] != 0;
    let odd = x[2] != 0 || x[3] != 0;
    match (even, odd) {
        (false, false) => None,
        (true, false) => Some(false),
        (false, true) => Some(true),
        (true, true) => panic!("inhomogeneous operand {x:?}"),
    }
}

pub fn commutator(x: Vec4, y: Vec4) -> Vec4 {
    add(mul(x, y), scale(-1, mul(y, x)))
}

pub fn anticommutator(x: Vec4, y: Vec4) -> Vec4 {
    add(mul(x, y), mul(y, x))
}

/// Commutator only when both operands are even.
pub fn graded_bracket(x: Vec4, y: Vec4) -> Vec4 {
    match (parity(x), parity(y)) {
        (Some(false), Some(false)) => commutator(x, y),
        (None, _) | (_, None) => [0; 4],
        _ => anticommutator(x, y),
    }
}

/// Normal ordering: absorb the leftmost non-final `a`, repeat, then sort
/// descending with adjacent swaps.
pub fn normalize(coeff: i64, word: &str) -> (i64, String) {
    let mut coeff = coeff;
    let mut w: Vec<char> = word.chars().collect();
    loop {
        let n = w.len();
        let Some(p) = (0..n.saturating_sub(1)).find(|&k| w[k] == 'a') else {
            break;
        };
        let (s, l) = letter_product('a', w[p + 1]);
        coeff *= s;
        w.splice(p..p + 2, [l]);
    }
    let rank = |c: char| idx(c);
    let mut swapped = true;
    while swapped {
        swapped = false;
        for k in 0..w.len().saturating_sub(1) {
            if rank(w[k]) < rank(w[k + 1]) {
                w.swap(k, k + 1);
                coeff = -coeff;
                swapped = true;
            }
        }
    }
    (coeff, w.into_iter().collect())
}

/// Full contraction of a nonempty word; also returns the chain of signed
/// words starting with the normal form.
pub fn contract_chain(coeff: i64, word: &str) -> (Vec4, Vec<String>) {
    let (mut coeff, w) = normalize(coeff, word);
    let mut w: Vec<char> = w.chars().collect();
    assert!(!w.is_empty(), "empty word");
    let show = |k: i64, w: &[char]| {
        format!(
            "{}{}",
            if k < 0 { "-" } else { "+" },
            w.iter().collect::<String>()
        )
    };
    let mut chain = vec![show(coeff, &w)];
    while w.len() >= 2 {
        let q = w.pop().unwrap();
        let p = w.pop().unwrap();
        let (s, l) = letter_product(p, q);
        coeff *= s;
        if !w.is_empty() && odd(p) != odd(q) {
            coeff = -coeff;
        }
        w.push(l);
        chain.push(show(coeff, &w));
    }
    (scale(coeff, unit(w[0])), chain)
}

pub fn contract(coeff: i64, word: &str) -> Vec4 {
    contract_chain(coeff, word).0
}

/// Nested bracket over letters; `true` marks a commutator.
#[derive(Clone, Debug)]
pub enum Tree {
    Leaf(char),
    Node(bool, Box<Tree>, Box<Tree>),
}

pub fn com(l: Tree, r: Tree) -> Tree {
    Tree::Node(true, Box::new(l), Box::new(r))
}

pub fn anti(l: Tree, r: Tree) -> Tree {
    Tree::Node(false, Box::new(l), Box::new(r))
}

pub fn leaf(c: char) -> Tree {
    Tree::Leaf(c)
}

/// Inner brackets first, each with its written kind.
pub fn fito(t: &Tree) -> Vec4 {
    match t {
        Tree::Leaf(c) => unit(*c),
        Tree::Node(is_com, l, r) => {
            let (x, y) = (fito(l), fito(r));
            if *is_com {
                commutator(x, y)
            } else {
                anticommutator(x, y)
            }
        }
    }
}

/// Formal expansion into signed words.
pub fn expand(t: &Tree) -> Vec<(i64, String)> {
    match t {
        Tree::Leaf(c) => vec![(1, c.to_string())],
        Tree::Node(is_com, l, r) => {
            let (l, r) = (expand(l), expand(r));
            let mut out = Vec::new();
            for (k1, w1) in &l {
                for (k2, w2) in &r {
                    out.push((k1 * k2, format!("{w1}{w2}")));
                }
            }
            let sign = if *is_com { -1 } else { 1 };
            for (k2, w2) in &r {
                for (k1, w1) in &l {
                    out.push((sign * k1 * k2, format!("{w2}{w1}")));
                }
            }
            out
        }
    }
}

/// Expand everything, then contract each word.
pub fn foti(terms: &[Tree]) -> Vec4 {
    terms
        .iter()
        .flat_map(expand)
        .filter(|(k, _)| *k != 0)
        .fold([0; 4], |acc, (k, w)| add(acc, contract(k, &w)))
}

fn t(s: &str) -> Tree {
    // tiny reader for "[x,y]" / "{x,y}" over single letters
    fn go(s: &[char], pos: &mut usize) -> Tree {
        let c = s[*pos];
        *pos += 1;
        match c {
            '[' | '{' => {
                let l = go(s, pos);
                assert_eq!(s[*pos], ',');
                *pos += 1;
                let r = go(s, pos);
                *pos += 1;
                Tree::Node(c == '[', Box::new(l), Box::new(r))
            }
            letter => Tree::Leaf(letter),
        }
    }
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    go(&chars, &mut pos)
}

/// The eight identities as printed, outer-first then inner-first.
pub fn identities() -> Vec<(&'static str, Vec<Tree>)> {
    let lines: [(&str, [&str; 3]); 8] = [
        ("outer-1", ["[{d,c},a]", "{{c,a},d}", "{{a,d},c}"]),
        ("outer-2", ["[{d,c},b]", "{{c,b},d}", "{{b,d},c}"]),
        ("outer-3", ["{[a,b],d}", "{{b,d},a}", "{{d,a},b}"]),
        ("outer-4", ["{[a,b],c}", "{{b,c},a}", "{{c,a},b}"]),
        ("inner-1", ["{d,{c,a}}", "{c,{a,d}}", "[a,{d,c}]"]),
        ("inner-2", ["{d,{c,b}}", "{c,{b,d}}", "[b,{d,c}]"]),
        ("inner-3", ["{a,{b,d}}", "{b,{d,a}}", "{d,[a,b]}"]),
        ("inner-4", ["{a,{b,c}}", "{b,{c,a}}", "{c,[a,b]}"]),
    ];
    lines
        .iter()
        .map(|(label, terms)| (*label, terms.iter().map(|s| t(s)).collect()))
        .collect()
}

pub fn commutator_variant() -> Vec<Tree> {
    ["[{d,c},a]", "{[c,a],d}", "{[a,d],c}"]
        .iter()
        .map(|s| t(s))
        .collect()
}

pub fn sum(terms: &[Tree]) -> Vec4 {
    terms.iter().map(fito).fold([0; 4], add)
}
