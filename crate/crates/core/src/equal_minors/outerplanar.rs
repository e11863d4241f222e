use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// An outerplanar embedding: the cyclic order of the vertices around the
/// unbounded face (walked clockwise) and the chords drawn inside it.
/// Vertices are labelled `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarInput {
    n: usize,
    outer: Vec<usize>,
    chords: BTreeSet<(usize, usize)>,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Two chords of a circle with endpoints at positions `a < b` and `c < d`
/// cross iff exactly one endpoint of one lies strictly inside the other.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl OuterplanarInput {
    /// Chords joining vertices adjacent on the outer cycle are dropped; any
    /// crossing pair of chords is an error.
    pub fn new(outer: Vec<usize>, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = outer.len();
        if n < 2 {
            return Err(Error::input("an outerplanar input needs at least 2 vertices"));
        }
        let mut sorted = outer.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::input(format!("outer face order must list 1..={n} once each")));
        }
        let mut g = Self { n, outer, chords: BTreeSet::new() };
        for (u, v) in chords {
            if u == 0 || v == 0 || u > n || v > n || u == v {
                return Err(Error::input(format!("invalid chord {u} {v}")));
            }
            if !g.outer_adjacent(u, v) {
                g.chords.insert(norm(u, v));
            }
        }
        let spans: Vec<(usize, usize)> = g.chords.iter().map(|&(u, v)| g.span(u, v)).collect();
        for (x, y) in spans.iter().tuple_combinations() {
            if chords_cross(*x, *y) {
                return Err(Error::input("chords cross with respect to the outer face order"));
            }
        }
        Ok(g)
    }

    /// Parses: first line `n`, second line the outer face order, then one
    /// chord `u v` per line.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let parse_list = |l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::input(format!("bad vertex label {t:?}"))))
                .collect()
        };
        let n = match lines.next().map(parse_list).transpose()?.as_deref() {
            Some([n]) => *n,
            _ => return Err(Error::input("graph file must start with the vertex count")),
        };
        let outer = parse_list(lines.next().ok_or_else(|| Error::input("missing outer face order"))?)?;
        if outer.len() != n {
            return Err(Error::input(format!("outer face order lists {} vertices, expected {n}", outer.len())));
        }
        let chords = lines
            .map(|l| match parse_list(l)?.as_slice() {
                [u, v] => Ok((*u, *v)),
                _ => Err(Error::input(format!("chord line {l:?} must hold two labels"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(outer, chords)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n{}\n", self.n, self.outer.iter().join(" "));
        for (u, v) in &self.chords {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn chords(&self) -> &BTreeSet<(usize, usize)> {
        &self.chords
    }

    fn position(&self, v: usize) -> usize {
        self.outer.iter().position(|&x| x == v).expect("vertex on the outer face")
    }

    fn span(&self, u: usize, v: usize) -> (usize, usize) {
        norm(self.position(u), self.position(v))
    }

    fn outer_adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.span(u, v);
        b == a + 1 || (a == 0 && b == self.n - 1)
    }

    /// Outer cycle edges (a single edge when `n = 2`) and chords, as sorted pairs.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut e: BTreeSet<(usize, usize)> = (0..self.n)
            .map(|s| norm(self.outer[s], self.outer[(s + 1) % self.n]))
            .filter(|&(u, v)| u != v)
            .collect();
        e.extend(self.chords.iter().copied());
        e
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Maximal: `2n − 3` edges, i.e. every bounded face is a triangle.
    pub fn is_maximal(&self) -> bool {
        self.n <= 3 || self.edges().len() == 2 * self.n - 3
    }
}

/// Adds chords until every bounded face is a triangle: faces are split along
/// the existing chords, then each remaining face is fanned from its first
/// vertex in outer order.
pub fn triangulate_outerplanar(g: &OuterplanarInput) -> Result<OuterplanarInput> {
    let mut chords = g.chords.clone();
    let mut faces: Vec<Vec<usize>> = vec![(0..g.n).collect()];
    while let Some(face) = faces.pop() {
        let split = face.iter().enumerate().find_map(|(x, &a)| {
            face.iter().enumerate().skip(x + 2).find_map(|(y, &b)| {
                let closing = x == 0 && y == face.len() - 1;
                (!closing && g.chords.contains(&norm(g.outer[a], g.outer[b]))).then_some((x, y))
            })
        });
        match split {
            Some((x, y)) => {
                faces.push(face[x..=y].to_vec());
                faces.push(face[y..].iter().chain(&face[..=x]).copied().collect());
            }
            None => {
                for &c in face.iter().skip(2).take(face.len().saturating_sub(3)) {
                    chords.insert(norm(g.outer[face[0]], g.outer[c]));
                }
            }
        }
    }
    OuterplanarInput::new(g.outer.clone(), chords)
}

/// Outer face order under which no two edges cross, found by trying all
/// `n!` orders; `None` certifies the graph is not
/// outerplanar. Returns the order and the number of orders examined.
pub fn find_outerplanar_order(n: usize, edges: &[(usize, usize)]) -> (Option<Vec<usize>>, usize) {
    let mut tried = 0;
    for perm in (1..=n).permutations(n) {
        tried += 1;
        let mut pos = vec![0; n + 1];
        for (p, &v) in perm.iter().enumerate() {
            pos[v] = p;
        }
        let spans: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| norm(pos[u], pos[v])).collect();
        if !spans.iter().tuple_combinations().any(|(x, y)| chords_cross(*x, *y)) {
            return (Some(perm), tried);
        }
    }
    (None, tried)
}

/// Seeded random maximal outerplanar graph on `n ≥ 2` vertices: ears are
/// stacked on random outer edges of a triangle, then the labels are shuffled.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Result<OuterplanarInput> {
    if n < 2 {
        return Err(Error::input("need at least 2 vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n.min(3)).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for next in 3..n {
        let s = rng.gen_range(0..order.len());
        let (a, b) = (order[s], order[(s + 1) % order.len()]);
        edges.push((a, b));
        order.insert(s + 1, next);
    }
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(&mut rng);
    let outer = order.iter().map(|&v| labels[v]).collect();
    OuterplanarInput::new(outer, edges.into_iter().map(|(a, b)| (labels[a], labels[b])))
}
