//! Decorated-tree fixed loci of stable-map spaces to P4 and the localization
//! graph sum producing genus-zero quintic invariants as exact rationals.
//!
//! A fixed locus is a tree whose vertices carry fixed-point labels (adjacent
//! labels distinct) and whose edges carry covering degrees summing to the map
//! degree. Its contribution factors as
//!
//! * a vertex factor per vertex: `bracket(j) = 5 alpha_j / prod(alpha_j - alpha_l)`
//!   times the moduli integral of the insertions, flag factors `1/(w - psi)`,
//!   and the optional slot factor `1/(z - psi)`;
//! * an edge factor `edge_term(d, j, j')` per edge;
//! * a flag factor `flag_term(j) = 1/bracket(j)` per edge end.
//!
//! Invariants sum `1/|Aut|` times the contribution over isomorphism classes;
//! automorphisms fix decorations and legs, so they are computed by brute
//! force over vertex permutations (trees here have at most `d + 1` vertices).
//! Exact arithmetic makes the parallel reduction order irrelevant.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::equivariant::AlphaSpec;
use crate::error::{Error, Result};
use crate::exact::{Poly, Rat, RatFn};
use crate::psi::{vertex_integral, VertexIntegrand, VertexValue};

/// Vertex labels, sorted degree-decorated edges, and leg homes, in the
/// order used for lexicographic canonicalization.
type TreeShape = (Vec<u8>, Vec<(usize, usize, u32)>, Vec<usize>);

/// One isomorphism class of decorated tree: vertex labels, edges with
/// covering degrees, and an assignment of distinguishable legs to vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecoratedTree {
    labels: Vec<u8>,
    edges: Vec<(usize, usize, u32)>,
    legs: Vec<usize>,
}

impl DecoratedTree {
    /// Builds and canonicalizes. Panics on structural violations (non-tree,
    /// equal adjacent labels, zero edge degree); enumeration never produces
    /// them, and tests construct only valid trees.
    pub fn new(labels: Vec<u8>, edges: Vec<(usize, usize, u32)>, legs: Vec<usize>) -> Self {
        let m = labels.len();
        assert_eq!(edges.len() + 1, m, "a tree on {m} vertices needs {} edges", m - 1);
        for &(u, v, d) in &edges {
            assert!(u < m && v < m && u != v, "edge endpoints out of range");
            assert!(labels[u] != labels[v], "adjacent vertices share a label");
            assert!(d >= 1, "edge degrees are positive");
        }
        for &v in &legs {
            assert!(v < m, "leg endpoint out of range");
        }
        let mut t = DecoratedTree { labels, edges, legs };
        assert!(t.is_connected(), "edge set is not connected");
        t.canonicalize();
        t
    }

    fn is_connected(&self) -> bool {
        let m = self.labels.len();
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b, _) in &self.edges {
                let other = if a == v { b } else if b == v { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn apply_perm(&self, perm: &[usize]) -> TreeShape {
        let m = self.labels.len();
        let mut labels = vec![0u8; m];
        for v in 0..m {
            labels[perm[v]] = self.labels[v];
        }
        let mut edges: Vec<(usize, usize, u32)> = self
            .edges
            .iter()
            .map(|&(u, v, d)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b), d)
            })
            .collect();
        edges.sort();
        let legs = self.legs.iter().map(|&v| perm[v]).collect();
        (labels, edges, legs)
    }

    /// Relabels vertices to the lexicographically smallest representative.
    fn canonicalize(&mut self) {
        let m = self.labels.len();
        let mut best: Option<TreeShape> = None;
        for perm in permutations(m) {
            let cand = self.apply_perm(&perm);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        let (labels, edges, legs) = best.expect("at least one vertex");
        self.labels = labels;
        self.edges = edges;
        self.legs = legs;
    }

    /// Order of the decoration-preserving automorphism group. Legs are
    /// distinguishable, so any vertex carrying a leg is fixed pointwise.
    pub fn aut_order(&self) -> u64 {
        let identity = self.apply_perm(&(0..self.labels.len()).collect::<Vec<_>>());
        permutations(self.labels.len())
            .into_iter()
            .filter(|p| self.apply_perm(p) == identity)
            .count() as u64
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v] as usize
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn total_degree(&self) -> u32 {
        self.edges.iter().map(|&(_, _, d)| d).sum()
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..m).collect();
    heap_permute(&mut items, m, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// All labeled trees on `m` vertices as edge lists (Pruefer decoding).
fn labeled_trees(m: usize) -> Vec<Vec<(usize, usize)>> {
    match m {
        0 => vec![],
        1 => vec![vec![]],
        2 => vec![vec![(0, 1)]],
        _ => {
            let mut out = Vec::new();
            let seq_len = m - 2;
            let mut seq = vec![0usize; seq_len];
            loop {
                out.push(decode_pruefer(&seq, m));
                // odometer increment over {0..m-1}^seq_len
                let mut i = 0;
                loop {
                    if i == seq_len {
                        return out;
                    }
                    seq[i] += 1;
                    if seq[i] < m {
                        break;
                    }
                    seq[i] = 0;
                    i += 1;
                }
            }
        }
    }
}

fn decode_pruefer(seq: &[usize], m: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1u32; m];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..m)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &x in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("leaf exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(std::cmp::Reverse(x));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().expect("two vertices remain");
    let std::cmp::Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    edges
}

/// Compositions of `total` into `parts` positive summands.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return if total >= 1 { vec![vec![total]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=(total.saturating_sub(parts as u32 - 1)) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of available fixed-point labels (the target is P4).
pub const LABELS: usize = 5;

/// Enumerates every isomorphism class of decorated tree with `n_marks`
/// distinguishable legs and total edge degree `d`, each exactly once, in a
/// deterministic order, together with its automorphism order. Empty for d=0
/// (edge-free loci are not trees of positive degree).
pub fn enumerate_graphs(n_marks: usize, d: u32) -> Vec<(DecoratedTree, u64)> {
    let mut classes: BTreeMap<DecoratedTree, ()> = BTreeMap::new();
    for ne in 1..=(d as usize) {
        let m = ne + 1;
        for shape in labeled_trees(m) {
            for degs in compositions(d, ne) {
                // vertex labels: adjacent labels must differ
                let mut labels = vec![0u8; m];
                'labelling: loop {
                    if shape
                        .iter()
                        .all(|&(u, v)| labels[u] != labels[v])
                    {
                        for legs in leg_assignments(n_marks, m) {
                            let edges: Vec<(usize, usize, u32)> = shape
                                .iter()
                                .zip(&degs)
                                .map(|(&(u, v), &dd)| (u.min(v), u.max(v), dd))
                                .collect();
                            let t = DecoratedTree::new(labels.clone(), edges, legs);
                            classes.entry(t).or_insert(());
                        }
                    }
                    // odometer over labels
                    let mut i = 0;
                    loop {
                        if i == m {
                            break 'labelling;
                        }
                        labels[i] += 1;
                        if (labels[i] as usize) < LABELS {
                            break;
                        }
                        labels[i] = 0;
                        i += 1;
                    }
                }
            }
        }
    }
    classes
        .into_keys()
        .map(|t| {
            let aut = t.aut_order();
            (t, aut)
        })
        .collect()
}

fn leg_assignments(n_marks: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n_marks {
        let mut next = Vec::with_capacity(out.len() * m);
        for partial in &out {
            for v in 0..m {
                let mut p = partial.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// `5 alpha_j / prod_{l != j}(alpha_j - alpha_l)`, the vertex prefactor.
pub fn bracket(j: usize, alpha: &AlphaSpec) -> Result<Rat> {
    Ok(flag_term(j, alpha)?.recip())
}

/// `F(j) = prod_{l != j}(alpha_j - alpha_l) / (5 alpha_j)`, one factor per
/// edge end.
pub fn flag_term(j: usize, alpha: &AlphaSpec) -> Result<Rat> {
    let mut num = Rat::one();
    for l in 0..alpha.len() {
        if l != j {
            num = &num * &alpha.diff(j, l);
        }
    }
    let den = Rat::from_int(5) * alpha.weight(j).clone();
    if den.is_zero() || num.is_zero() {
        return Err(Error::DegenerateAlpha {
            detail: format!("flag factor at fixed point {j} is degenerate"),
        });
    }
    Ok(num / den)
}

/// Euler factor of a degree-`d` edge between fixed points `j` and `jp`:
/// `(1/d) * prod_{k=0}^{5d}(5 alpha_j + k s) / prod_{(l,k)}(alpha_j - alpha_l + k s)`
/// with `s = (alpha_jp - alpha_j)/d`, the denominator omitting the two
/// identically-zero factors at `(l,k) = (j,0)` and `(jp,d)`.
pub fn edge_term(d: u32, j: usize, jp: usize, alpha: &AlphaSpec) -> Result<Rat> {
    assert_ne!(j, jp, "an edge joins distinct fixed points");
    assert!(d >= 1);
    let step = alpha.diff(jp, j) / Rat::from_int(d as i64);
    let mut num = Rat::one();
    for k in 0..=(5 * d) {
        num = num * (Rat::from_int(5) * alpha.weight(j).clone() + Rat::from_int(k as i64) * step.clone());
    }
    let mut den = Rat::from_int(d as i64);
    for l in 0..alpha.len() {
        for k in 0..=d {
            if (l, k) == (j, 0) || (l, k) == (jp, d) {
                continue;
            }
            let f = alpha.diff(j, l) + Rat::from_int(k as i64) * step.clone();
            if f.is_zero() {
                return Err(Error::DegenerateAlpha {
                    detail: format!(
                        "edge ({j},{jp}) of degree {d}: weight alpha_{j} - alpha_{l} + {k}(alpha_{jp} - alpha_{j})/{d} vanishes"
                    ),
                });
            }
            den = den * f;
        }
    }
    Ok(num / den)
}

/// A correlator insertion `H^b psi^a`, restricted at the fixed point `p_j`
/// to `alpha_j^b psi^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub h_power: u32,
    pub psi_power: u64,
}

impl Insertion {
    fn restrict(&self, j: usize, alpha: &AlphaSpec) -> Poly {
        Poly::monomial(alpha.weight(j).pow(self.h_power as i64), self.psi_power as usize)
    }
}

/// Vertex contribution: prefactor times moduli integral of insertion
/// polynomials, edge flag factors, and the optional slot factor.
pub fn vertex_term(
    j: usize,
    insertions: Vec<Poly>,
    edge_weights: Vec<Rat>,
    open_slot: bool,
    alpha: &AlphaSpec,
) -> Result<VertexValue> {
    for w in &edge_weights {
        if w.is_zero() {
            return Err(Error::ZeroFlagWeight { label: j });
        }
    }
    let br = bracket(j, alpha)?;
    let value = vertex_integral(&VertexIntegrand {
        insertions,
        flag_weights: edge_weights,
        open_slot,
    })?;
    Ok(match value {
        VertexValue::Scalar(r) => VertexValue::Scalar(br * r),
        VertexValue::OfZ(f) => VertexValue::OfZ(&RatFn::from_rat(br) * &f),
    })
}

fn flag_weight(tree: &DecoratedTree, v: usize, u: usize, d: u32, alpha: &AlphaSpec) -> Rat {
    // weight at the v-end of an edge to u: (alpha_near - alpha_far) / degree
    alpha.diff(tree.label(v), tree.label(u)) / Rat::from_int(d as i64)
}

/// Contribution of one decorated tree to a closed (slotless) invariant.
fn closed_tree_value(
    tree: &DecoratedTree,
    insertions: &[Insertion],
    alpha: &AlphaSpec,
) -> Result<Rat> {
    let mut value = Rat::one();
    for v in 0..tree.vertex_count() {
        let polys: Vec<Poly> = tree
            .legs()
            .iter()
            .enumerate()
            .filter(|&(_, &lv)| lv == v)
            .map(|(li, _)| insertions[li].restrict(tree.label(v), alpha))
            .collect();
        let weights: Vec<Rat> = tree
            .edges()
            .iter()
            .filter(|&&(a, b, _)| a == v || b == v)
            .map(|&(a, b, d)| flag_weight(tree, v, if a == v { b } else { a }, d, alpha))
            .collect();
        match vertex_term(v_label(tree, v), polys, weights, false, alpha)? {
            VertexValue::Scalar(r) => value = value * r,
            VertexValue::OfZ(_) => unreachable!("no slot in a closed invariant"),
        }
    }
    for &(u, v, d) in tree.edges() {
        value = value * edge_term(d, tree.label(u), tree.label(v), alpha)?;
        value = value * flag_term(tree.label(u), alpha)?;
        value = value * flag_term(tree.label(v), alpha)?;
    }
    Ok(value)
}

fn v_label(tree: &DecoratedTree, v: usize) -> usize {
    tree.label(v)
}

/// Genus-zero quintic invariant of degree `d` with the given insertions,
/// computed as the localization graph sum. The virtual dimension of the
/// moduli space is the number of marks, so the insertion degrees must sum to
/// it; `correlator_unchecked` skips that gate for diagnostics (its output is
/// then alpha-dependent).
pub fn correlator(d: u32, insertions: &[Insertion], alpha: &AlphaSpec) -> Result<Rat> {
    let n = insertions.len();
    let got: u64 = insertions
        .iter()
        .map(|i| i.h_power as u64 + i.psi_power)
        .sum();
    if got != n as u64 {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: got as usize,
        });
    }
    correlator_unchecked(d, insertions, alpha)
}

/// The graph sum without the dimension gate.
pub fn correlator_unchecked(d: u32, insertions: &[Insertion], alpha: &AlphaSpec) -> Result<Rat> {
    let graphs = enumerate_graphs(insertions.len(), d);
    let terms: Vec<Result<Rat>> = graphs
        .par_iter()
        .map(|(tree, aut)| {
            Ok(closed_tree_value(tree, insertions, alpha)? / Rat::from_int(*aut as i64))
        })
        .collect();
    let mut total = Rat::zero();
    for t in terms {
        total = total + t?;
    }
    Ok(total)
}

/// Graph sum of degree `d` with `n_legs` series legs and one slot forced to
/// sit at a vertex labelled `j`. Legs carry psi-polynomials depending on the
/// leg index and the vertex label. Degree 0 is the edge-free stratum: a
/// single stable vertex needing `n_legs >= 2`.
pub fn slot_graph_sum<F>(
    j: usize,
    d: u32,
    n_legs: usize,
    leg_poly: F,
    alpha: &AlphaSpec,
) -> Result<RatFn>
where
    F: Fn(usize, usize) -> Poly,
{
    if d == 0 {
        if n_legs < 2 {
            return Ok(RatFn::zero());
        }
        let polys: Vec<Poly> = (0..n_legs).map(|li| leg_poly(li, j)).collect();
        return Ok(vertex_term(j, polys, vec![], true, alpha)?.expect_of_z());
    }
    // legs 0..n_legs plus the slot as a final distinguished mark
    let graphs = enumerate_graphs(n_legs + 1, d);
    let mut total = RatFn::zero();
    for (tree, aut) in &graphs {
        let slot_vertex = *tree.legs().last().expect("slot leg present");
        if tree.label(slot_vertex) != j {
            continue;
        }
        let mut scalar = Rat::one() / Rat::from_int(*aut as i64);
        let mut of_z = RatFn::one();
        for v in 0..tree.vertex_count() {
            let polys: Vec<Poly> = tree.legs()[..n_legs]
                .iter()
                .enumerate()
                .filter(|&(_, &lv)| lv == v)
                .map(|(li, _)| leg_poly(li, tree.label(v)))
                .collect();
            let weights: Vec<Rat> = tree
                .edges()
                .iter()
                .filter(|&&(a, b, _)| a == v || b == v)
                .map(|&(a, b, dd)| flag_weight(tree, v, if a == v { b } else { a }, dd, alpha))
                .collect();
            let has_slot = v == slot_vertex;
            match vertex_term(tree.label(v), polys, weights, has_slot, alpha)? {
                VertexValue::Scalar(r) => scalar = scalar * r,
                VertexValue::OfZ(f) => of_z = &of_z * &f,
            }
        }
        for &(u, v, dd) in tree.edges() {
            scalar = scalar * edge_term(dd, tree.label(u), tree.label(v), alpha)?;
            scalar = scalar * flag_term(tree.label(u), alpha)?;
            scalar = scalar * flag_term(tree.label(v), alpha)?;
        }
        total = &total + &(&RatFn::from_rat(scalar) * &of_z);
    }
    Ok(total)
}

/// Per-q-order restricted correlator with the slot at fixed point `j`:
/// index `m` holds the sum over edge degree `d <= m`, leg counts `n`, and
/// leg q-powers `i_1 + ... + i_n = m - d` (each >= 1) of
/// `1/n!` times the slot graph sum. Legs are described by
/// `leg_series(q_power, vertex_label)`, a psi-polynomial with no q-constant
/// term (q_power >= 1 always).
pub fn restricted_correlator_at_fixed_point<F>(
    j: usize,
    max_q_order: usize,
    leg_series: F,
    alpha: &AlphaSpec,
) -> Result<Vec<RatFn>>
where
    F: Fn(usize, usize) -> Poly,
{
    let mut out = Vec::with_capacity(max_q_order + 1);
    for m in 0..=max_q_order {
        let mut acc = RatFn::zero();
        for d in 0..=(m as u32) {
            let rem = m as u32 - d;
            let n_min = if d == 0 { 2 } else { 0 };
            let mut n = n_min;
            while n as u32 <= rem || (n == 0 && rem == 0) {
                for powers in compositions(rem, n) {
                    let sum = slot_graph_sum(
                        j,
                        d,
                        n,
                        |li, label| leg_series(powers[li] as usize, label),
                        alpha,
                    )?;
                    let weight = RatFn::from_rat(Rat::factorial(n as u64).recip());
                    acc = &acc + &(&weight * &sum);
                }
                if n == 0 && rem == 0 {
                    break;
                }
                n += 1;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Independent census count used as a cross-check on [`enumerate_graphs`]:
/// trees are built by choosing edge subsets of a complete graph and testing
/// connectivity, instead of decoding Pruefer sequences, then decorated and
/// canonicalized the same way.
pub(crate) fn brute_force_census_count(n_marks: usize, d: u32) -> usize {
    fn spans(edges: &[(usize, usize)], m: usize) -> bool {
        fn find(parent: &mut [usize], x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        let mut parent: Vec<usize> = (0..m).collect();
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
        let root = find(&mut parent, 0);
        (0..m).all(|v| find(&mut parent, v) == root)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose_edges(
        start: usize,
        remaining: usize,
        pairs: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        m: usize,
        d: u32,
        n_marks: usize,
        classes: &mut BTreeSet<DecoratedTree>,
    ) {
        if remaining > 0 {
            for i in start..pairs.len() {
                chosen.push(pairs[i]);
                choose_edges(i + 1, remaining - 1, pairs, chosen, m, d, n_marks, classes);
                chosen.pop();
            }
            return;
        }
        if !spans(chosen, m) {
            return;
        }
        for degs in compositions(d, chosen.len()) {
            let mut labels = vec![0u8; m];
            'labels: loop {
                if chosen.iter().all(|&(u, v)| labels[u] != labels[v]) {
                    for legs in leg_assignments(n_marks, m) {
                        let edges: Vec<_> = chosen
                            .iter()
                            .zip(&degs)
                            .map(|(&(u, v), &dd)| (u, v, dd))
                            .collect();
                        classes.insert(DecoratedTree::new(labels.clone(), edges, legs));
                    }
                }
                let mut i = 0;
                loop {
                    if i == m {
                        break 'labels;
                    }
                    labels[i] += 1;
                    if (labels[i] as usize) < LABELS {
                        break;
                    }
                    labels[i] = 0;
                    i += 1;
                }
            }
        }
    }

    let mut classes = BTreeSet::new();
    for ne in 1..=(d as usize) {
        let m = ne + 1;
        let mut all_pairs = Vec::new();
        for u in 0..m {
            for v in (u + 1)..m {
                all_pairs.push((u, v));
            }
        }
        let mut chosen = Vec::with_capacity(ne);
        choose_edges(0, ne, &all_pairs, &mut chosen, m, d, n_marks, &mut classes);
    }
    classes.len()
}
