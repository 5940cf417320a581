//! Brute-force oracles and graph corpora shared by the integration suites.
//! None of this calls the algorithms it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use surfsing::{DualGraph, IntersectionMatrix};

/// `(weight, genus)` labels used by the exhaustive corpus.
pub fn corpus_labels() -> Vec<(i64, u32)> {
    let mut labels = Vec::new();
    for w in -5..=-2 {
        for g in 0..=1 {
            labels.push((w, g));
        }
    }
    labels
}

fn multisets(
    labels: &[(i64, u32)],
    k: usize,
    start: usize,
    acc: &mut Vec<(i64, u32)>,
    out: &mut Vec<Vec<(i64, u32)>>,
) {
    if acc.len() == k {
        out.push(acc.clone());
        return;
    }
    for i in start..labels.len() {
        acc.push(labels[i]);
        multisets(labels, k, i, acc, out);
        acc.pop();
    }
}

fn connected(n: usize, mult: &[u32], pairs: &[(usize, usize)]) -> bool {
    let mut seen = BTreeSet::from([0]);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mult[k] == 0 {
                continue;
            }
            let w = if i == v {
                j
            } else if j == v {
                i
            } else {
                continue;
            };
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == n
}

/// Every connected graph on 1..=`max_vertices` vertices with labels from
/// [`corpus_labels`] and edge multiplicities in `0..=max_mult`, up to
/// relabelling (vertex labels are taken in non-decreasing order, which meets
/// every isomorphism class). Definiteness is not filtered here.
pub fn exhaustive_corpus(max_vertices: usize, max_mult: u32) -> Vec<DualGraph> {
    let labels = corpus_labels();
    let mut graphs = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let mut label_sets = Vec::new();
        multisets(&labels, n, 0, &mut Vec::new(), &mut label_sets);
        let configs = (max_mult as usize + 1).pow(pairs.len() as u32);
        for code in 0..configs {
            let mut mult = vec![0u32; pairs.len()];
            let mut c = code;
            for m in mult.iter_mut() {
                *m = (c % (max_mult as usize + 1)) as u32;
                c /= max_mult as usize + 1;
            }
            if !connected(n, &mult, &pairs) {
                continue;
            }
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mult)
                .flat_map(|(&p, &m)| std::iter::repeat_n(p, m as usize))
                .collect();
            for nodes in &label_sets {
                graphs.push(DualGraph::new(nodes, &edges).expect("connected loop-free graph"));
            }
        }
    }
    graphs
}

pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

/// Negative definiteness from cofactor-expansion minors.
pub fn oracle_negative_definite(m: &IntersectionMatrix) -> bool {
    (1..=m.dim()).all(|k| {
        let block: Vec<Vec<i64>> = m.rows()[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = cofactor_det(&block);
        if k % 2 == 1 {
            d < 0
        } else {
            d > 0
        }
    })
}

fn for_each_anti_nef(m: &IntersectionMatrix, bound: i64, mut visit: impl FnMut(&[i64])) {
    let n = m.dim();
    let rows = m.rows();
    let mut c = vec![0i64; n];
    let mut degrees = vec![0i64; n];
    loop {
        // Odometer step, keeping degrees[i] = (M c)_i.
        let mut k = 0;
        while k < n && c[k] == bound {
            c[k] = 0;
            for i in 0..n {
                degrees[i] -= bound * rows[i][k];
            }
            k += 1;
        }
        if k == n {
            return;
        }
        c[k] += 1;
        for i in 0..n {
            degrees[i] += rows[i][k];
        }
        if degrees.iter().all(|&d| d <= 0) {
            visit(&c);
        }
    }
}

/// The least nonzero anti-nef cycle among all cycles with coefficients in
/// `0..=bound`, found by exhaustive search.
///
/// Returns `None` if there is no anti-nef cycle in the box or if the
/// anti-nef cycles there have no least element.
pub fn brute_force_fundamental_cycle(m: &IntersectionMatrix, bound: i64) -> Option<Vec<i64>> {
    let mut least: Option<Vec<i64>> = None;
    for_each_anti_nef(m, bound, |c| {
        let sum: i64 = c.iter().sum();
        if least.as_ref().is_none_or(|l| sum < l.iter().sum()) {
            least = Some(c.to_vec());
        }
    });
    let least = least?;
    let mut is_least = true;
    for_each_anti_nef(m, bound, |c| {
        is_least &= c.iter().zip(&least).all(|(a, b)| a >= b);
    });
    is_least.then_some(least)
}

/// [`brute_force_fundamental_cycle`] on the box `0..=bound`, doubling the
/// bound while the box holds no anti-nef cycle at all. Returns the cycle and
/// the bound that was finally searched.
pub fn brute_force_fundamental_cycle_growing(
    m: &IntersectionMatrix,
    mut bound: i64,
) -> (Option<Vec<i64>>, i64) {
    loop {
        let mut any = false;
        for_each_anti_nef(m, bound, |_| any = true);
        if any || bound >= 256 {
            return (brute_force_fundamental_cycle(m, bound), bound);
        }
        bound *= 2;
    }
}

/// `p_a(Z)` as an exact fraction `(numerator, denominator)` straight from the
/// matrix and adjunction, reduced.
pub fn oracle_arithmetic_genus(g: &DualGraph, z: &[i64]) -> (i64, i64) {
    let m = g.intersection_matrix();
    let n = z.len();
    let mut zz = 0;
    for i in 0..n {
        for j in 0..n {
            zz += z[i] * m.get(i, j) * z[j];
        }
    }
    let kz: i64 = (0..n)
        .map(|i| z[i] * (2 * g.genus(i) as i64 - 2 - g.weight(i)))
        .sum();
    // 1 + (zz + kz) / 2
    let num = 2 + zz + kz;
    if num % 2 == 0 {
        (num / 2, 1)
    } else {
        (num, 2)
    }
}

/// The genus criterion for minimal ellipticity, by scanning the whole
/// box below `z_num`.
pub fn oracle_condition1(g: &DualGraph, z_num: &[i64]) -> bool {
    if oracle_arithmetic_genus(g, z_num) != (1, 1) {
        return false;
    }
    let n = z_num.len();
    let mut d = vec![0i64; n];
    loop {
        let mut k = 0;
        while k < n && d[k] == z_num[k] {
            d[k] = 0;
            k += 1;
        }
        if k == n {
            return true;
        }
        d[k] += 1;
        if d != z_num {
            let (p, q) = oracle_arithmetic_genus(g, &d);
            if p >= q {
                return false;
            }
        }
    }
}

/// Cycle rank by counting the edges left over after a spanning forest.
pub fn oracle_is_tree(g: &DualGraph) -> bool {
    let n = g.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (i, j) in g.edge_list() {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// `(e, a)` pairs with Milnor fiber Euler number `d`, by scanning a box.
pub fn scan_sweep_plans(d: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for e in -1..=100 {
        for a in (e + 3)..=200 {
            if e - 2 * a == d {
                out.push((e, a));
            }
        }
    }
    out
}

/// The ADE graphs `A1..A8`, `D4`, `E6`, `E7`, `E8`, built here rather than
/// taken from the catalog.
pub fn ade_graphs() -> Vec<(String, DualGraph)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        out.push((
            format!("A{n}"),
            DualGraph::new(&vec![(-2, 0); n], &edges).unwrap(),
        ));
    }
    out.push((
        "D4".into(),
        DualGraph::new(&[(-2, 0); 4], &[(3, 0), (3, 1), (3, 2)]).unwrap(),
    ));
    for n in 6..=8 {
        // Branch vertex 0 with arms of lengths 1, 2 and n - 4.
        let mut edges = vec![(0, 1), (0, 2), (2, 3)];
        let mut prev = 0;
        for v in 4..n {
            edges.push((prev, v));
            prev = v;
        }
        out.push((
            format!("E{n}"),
            DualGraph::new(&vec![(-2, 0); n], &edges).unwrap(),
        ));
    }
    out
}
