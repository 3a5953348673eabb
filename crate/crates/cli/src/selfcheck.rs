use agraph::cubical::GridMap;
use agraph::fundamental::{A1Complex, Equivalence, LoopWalk};
use agraph::graph::{cartesian_product, Graph, Vertex};
use agraph::loopspace::{alpha_surjectivity_roundtrip, build_loop_graph, remark_constant_loop_check};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::{CommandResult, Status};

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.45) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("simple edge list").with_base(0);
        if g.is_connected() {
            return g;
        }
    }
}

/// A closed walk at `base` of the given length that stays in `allowed`.
fn random_walk_in(g: &Graph, base: Vertex, len: usize, allowed: &[bool], rng: &mut ChaCha8Rng) -> Vec<Vertex> {
    let mut walk = vec![base];
    for step in 0..len {
        if step + 1 == len {
            walk.push(base);
            break;
        }
        let here = walk[step];
        let mut options: Vec<Vertex> = g.neighbors(here).iter().copied().filter(|&v| allowed[v]).collect();
        options.push(here);
        walk.push(*options.choose(rng).expect("the current vertex is always an option"));
    }
    if walk.len() > 1 && !g.is_close(walk[walk.len() - 2], base) {
        return vec![base];
    }
    walk
}

/// Whether `(x, y) -> (y, x)` is an isomorphism `G x H -> H x G`.
fn swap_is_isomorphism(g: &Graph, h: &Graph) -> bool {
    let (gh, hg) = (cartesian_product(g, h), cartesian_product(h, g));
    let swap = |v: Vertex| -> Option<Vertex> {
        let (x, y) = (v / h.vertex_count(), v % h.vertex_count());
        hg.vertex(&format!("({},{})", h.name(y), g.name(x)))
    };
    let map: Option<Vec<Vertex>> = gh.vertices().map(swap).collect();
    map.is_some_and(|m| {
        gh.edge_count() == hg.edge_count() && gh.edges().iter().all(|&(u, v)| hg.is_adjacent(m[u], m[v]))
    })
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Randomized consistency checks across the library.
pub fn run(seed: u64, cases: usize) -> CommandResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for case in 0..cases {
        let n = rng.gen_range(2..=6);
        let g = random_connected(&mut rng, n);

        let k = rng.gen_range(1..=3);
        let h = random_connected(&mut rng, k);
        tally.record(swap_is_isomorphism(&g, &h), || format!("case {case}: product not commutative"));

        match build_loop_graph(&g, 0, 4, true) {
            Ok(omega) => {
                let bad = omega.walks().iter().find(|phi| !remark_constant_loop_check(&g, 0, phi));
                tally.record(bad.is_none(), || format!("case {case}: constant-loop check failed"));
            }
            Err(e) => tally.record(false, || format!("case {case}: loop graph: {e}")),
        }

        let everywhere = vec![true; n];
        let len = rng.gen_range(1..=6);
        let walk = random_walk_in(&g, 0, len, &everywhere, &mut rng);
        let pos = rng.gen_range(0..walk.len());
        let here = walk[pos];
        let mut backtracked = walk.clone();
        if let Some(&u) = g.neighbors(here).choose(&mut rng) {
            backtracked.splice(pos + 1..pos + 1, [u, here]);
        }
        let verdict = A1Complex::new(&g, 0).and_then(|a| {
            let l1 = LoopWalk::new(&g, 0, walk.clone())?;
            let l2 = LoopWalk::new(&g, 0, backtracked.clone())?;
            a.loops_equivalent(&l1, &l2)
        });
        tally.record(matches!(verdict, Ok(Equivalence::Equal)), || {
            format!("case {case}: {walk:?} vs {backtracked:?} gave {verdict:?}")
        });

        let near: Vec<bool> = g.vertices().map(|v| g.is_close(v, 0)).collect();
        let column = random_walk_in(&g, 0, len, &near, &mut rng);
        let entries = column.iter().enumerate().map(|(y, &v)| (vec![1, y as i64], v));
        let ok = GridMap::from_support(2, 0, entries)
            .and_then(|grid| alpha_surjectivity_roundtrip(&grid, &g))
            .unwrap_or(false);
        tally.record(ok, || format!("case {case}: surjectivity failed on column {column:?}"));
    }

    let passed = tally.checks - tally.failures.len();
    let mut text = format!("selfcheck seed={seed}: {passed}/{} checks passed", tally.checks);
    for f in &tally.failures {
        text.push_str("\n  ");
        text.push_str(f);
    }
    let status = if tally.failures.is_empty() { Status::Ok } else { Status::Error };
    let json = json!({ "seed": seed, "checks": tally.checks, "passed": passed, "failures": tally.failures });
    CommandResult { status, text, json, raw: false }
}
