//! Canonical labelling by adjacency-code minimisation.
//!
//! Vertices are first split into label-invariant cells by colour refinement
//! (degree, then multisets of neighbour colours). The canonical form is the
//! relabelling, among those that respect the cell order, whose graph6 bit
//! string (column-major upper triangle) is lexicographically smallest. The
//! search assigns positions left to right and cuts any branch whose column
//! prefix already exceeds the best one found. Intended for small graphs.

use super::{write_graph6, Graph};

/// Relabelled graph that is identical for every member of an isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permute(&perm).expect("canonical order is a permutation")
}

/// graph6 text of the canonical form.
pub fn canonical_code(g: &Graph) -> String {
    write_graph6(&canonical_form(g)).expect("canonical codes are limited to order 62")
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = distinct(&color);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| sorted.binary_search(k).unwrap())
            .collect();
        let count = sorted.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    cell_of_pos: Vec<usize>,
    members: Vec<Vec<usize>>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best_cols: Vec<u64>,
    best: Vec<usize>,
    cols: Vec<u64>,
}

impl Search<'_> {
    fn column(&self, j: usize, v: usize) -> u64 {
        // Bit for position i < j, most significant first.
        let mut c = 0u64;
        for i in 0..j {
            c = c << 1 | self.g.has_edge(self.placed[i], v) as u64;
        }
        c
    }

    /// `tight`: the placed prefix equals the best code's prefix (or no best exists yet).
    /// Returns whether the best code was replaced inside this subtree.
    fn run(&mut self, j: usize, tight: bool) -> bool {
        let n = self.g.order();
        if j == n {
            if !tight || self.best.is_empty() {
                self.best = self.placed.clone();
                self.best_cols = self.cols.clone();
                return true;
            }
            return false;
        }
        let mut tight = tight;
        let mut replaced = false;
        let cell = self.cell_of_pos[j];
        for idx in 0..self.members[cell].len() {
            let v = self.members[cell][idx];
            if self.used[v] {
                continue;
            }
            let col = self.column(j, v);
            let child_tight = if !tight {
                false
            } else if self.best.is_empty() {
                true
            } else {
                match col.cmp(&self.best_cols[j]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => true,
                }
            };
            self.used[v] = true;
            self.placed.push(v);
            self.cols.push(col);
            if self.run(j + 1, child_tight) {
                // The current prefix is now the best prefix.
                tight = true;
                replaced = true;
            }
            self.cols.pop();
            self.placed.pop();
            self.used[v] = false;
        }
        replaced
    }
}

fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    assert!(n <= 64, "canonical labelling is for small graphs");
    let color = refine(g);
    let cells = color.iter().copied().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); cells];
    for v in 0..n {
        members[color[v]].push(v);
    }
    let cell_of_pos: Vec<usize> = members
        .iter()
        .enumerate()
        .flat_map(|(c, m)| std::iter::repeat_n(c, m.len()))
        .collect();
    let mut s = Search {
        g,
        cell_of_pos,
        members,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        best_cols: Vec::new(),
        best: Vec::new(),
        cols: Vec::with_capacity(n),
    };
    s.run(0, true);
    s.best
}
