//! Seeded samplers for G(n,p) and the inhomogeneous two-block model, plus the
//! Chernoff tail utility shared by the statistical checkers.
//!
//! Sampling walks the linearized pair index with geometric jumps rather than
//! flipping a coin per pair, so expected time is O(m). Every consumer gets an
//! independent ChaCha8 stream keyed by (seed value, domain, trial); results
//! never depend on scheduling or call order.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// 64-bit seed with a trial index for stream splitting.
///
/// The same (value, trial) pair always yields identical samples.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct Seed {
    pub value: u64,
    pub trial: u64,
}

impl Seed {
    pub fn new(value: u64) -> Self {
        Seed { value, trial: 0 }
    }

    pub fn with_trial(self, trial: u64) -> Self {
        Seed { trial, ..self }
    }

    /// Child seed obtained by hashing (value, trial, salt), trial reset.
    /// Splits a nested trial dimension (restarts within a run, cells within
    /// a sweep) without colliding with the parent's streams.
    pub fn derive(self, salt: u64) -> Seed {
        let mut state = self.value ^ salt.wrapping_mul(0xA24BAED4963EE407);
        state ^= self.trial.wrapping_mul(0x9FB21C651E98DF25);
        Seed {
            value: splitmix64(&mut state),
            trial: 0,
        }
    }
}

/// Stream domains, so distinct pipeline stages never share a stream even
/// under the same (value, trial).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Domain {
    Gnp,
    Gnpp,
    Sparsify,
    LocalSearch,
    Diagnostics,
    Sweep,
}

impl Domain {
    fn tag(self) -> u64 {
        match self {
            Domain::Gnp => 0x01,
            Domain::Gnpp => 0x02,
            Domain::Sparsify => 0x03,
            Domain::LocalSearch => 0x04,
            Domain::Diagnostics => 0x05,
            Domain::Sweep => 0x06,
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// ChaCha8 stream keyed by hashing (seed value, domain, trial).
pub fn stream(seed: Seed, domain: Domain) -> ChaCha8Rng {
    let mut state = seed.value;
    let a = splitmix64(&mut state);
    state ^= domain.tag().wrapping_mul(0xD1B54A32D192ED03);
    let b = splitmix64(&mut state);
    state ^= seed.trial.wrapping_mul(0x8CB92BA72F3D8DD7);
    let c = splitmix64(&mut state);
    let d = splitmix64(&mut state);
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&a.to_le_bytes());
    key[8..16].copy_from_slice(&b.to_le_bytes());
    key[16..24].copy_from_slice(&c.to_le_bytes());
    key[24..].copy_from_slice(&d.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Geometric jump: number of failures before the next success at rate p.
#[inline]
fn geometric_skip(rng: &mut ChaCha8Rng, p: f64) -> u64 {
    if p >= 1.0 {
        return 0;
    }
    // u in [0,1) keeps 1-u in (0,1], so the log is finite and the skip >= 0
    let u: f64 = rng.gen();
    let skip = ((1.0 - u).ln() / (1.0 - p).ln()).floor();
    if skip >= u64::MAX as f64 {
        u64::MAX
    } else {
        skip as u64
    }
}

fn check_probability(p: f64, name: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::invalid(format!("{name} = {p} outside [0,1]")));
    }
    Ok(())
}

/// Visits the indices selected by a Bernoulli(p) process over `0..total`
/// via geometric skipping.
fn sample_positions(rng: &mut ChaCha8Rng, total: u64, p: f64, mut visit: impl FnMut(u64)) {
    if p <= 0.0 || total == 0 {
        return;
    }
    let mut pos: u64 = 0;
    loop {
        let skip = geometric_skip(rng, p);
        pos = match pos.checked_add(skip) {
            Some(x) => x,
            None => break,
        };
        if pos >= total {
            break;
        }
        visit(pos);
        pos += 1;
    }
}

/// G(n,p): every unordered pair is an edge independently with probability p.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    check_probability(p, "p")?;
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut rng = stream(seed, Domain::Gnp);
    let total = (n as u64) * (n as u64 - 1) / 2;
    let mut g = Graph::empty(n);
    // unrank the linear index with a row pointer; positions arrive ascending
    let mut row: u64 = 0;
    let mut row_start: u64 = 0; // index of pair (row, row+1)
    let mut row_len = n as u64 - 1;
    sample_positions(&mut rng, total, p, |pos| {
        while pos >= row_start + row_len {
            row_start += row_len;
            row += 1;
            row_len = n as u64 - 1 - row;
        }
        let u = row as usize;
        let v = (row + 1 + (pos - row_start)) as usize;
        g.add_edge_mut(u, v).expect("sampler emits distinct pairs");
    });
    Ok(g)
}

/// The two-block layout: B is the first half of the vertex range, A the rest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GnppLayout {
    pub n: usize,
    pub b: VertexSet,
    pub a: VertexSet,
}

impl GnppLayout {
    pub fn new(n: usize) -> Self {
        let half = n / 2;
        GnppLayout {
            n,
            b: VertexSet::from_range(n, 0..half),
            a: VertexSet::from_range(n, half..n),
        }
    }

    pub fn b_size(&self) -> usize {
        self.b.card()
    }
}

/// G(n,p,p'): pairs inside B are edges with probability p*p', pairs inside A
/// never, and A-B pairs with probability p.
pub fn sample_gnpp(n: usize, p: f64, pprime: f64, seed: Seed) -> Result<(Graph, GnppLayout)> {
    check_probability(p, "p")?;
    check_probability(pprime, "pprime")?;
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let layout = GnppLayout::new(n);
    let nb = layout.b_size() as u64;
    let na = n as u64 - nb;
    let mut rng = stream(seed, Domain::Gnpp);
    let mut g = Graph::empty(n);

    // B-internal pairs, linearized like sample_gnp over 0..nb
    let total_b = nb * nb.saturating_sub(1) / 2;
    let mut row: u64 = 0;
    let mut row_start: u64 = 0;
    let mut row_len = nb.saturating_sub(1);
    sample_positions(&mut rng, total_b, p * pprime, |pos| {
        while pos >= row_start + row_len {
            row_start += row_len;
            row += 1;
            row_len = nb - 1 - row;
        }
        let u = row as usize;
        let v = (row + 1 + (pos - row_start)) as usize;
        g.add_edge_mut(u, v).expect("sampler emits distinct pairs");
    });

    // A-B pairs as an na x nb grid
    sample_positions(&mut rng, na * nb, p, |pos| {
        let a = (nb + pos / nb) as usize;
        let b = (pos % nb) as usize;
        g.add_edge_mut(a, b).expect("sampler emits distinct pairs");
    });

    Ok((g, layout))
}

/// Chernoff tail bound exp(-delta^2 * mean / 3), valid for both tails of a
/// binomial with the given mean when 0 < delta < 3/2.
pub fn chernoff_tail(mean: f64, delta: f64) -> Result<f64> {
    if mean <= 0.0 || mean.is_nan() {
        return Err(Error::invalid(format!("mean = {mean} must be positive")));
    }
    if !(delta > 0.0 && delta < 1.5) {
        return Err(Error::invalid(format!("delta = {delta} outside (0, 3/2)")));
    }
    Ok((-delta * delta * mean / 3.0).exp())
}

/// Uniform k-subset of `pool`, deterministic under the rng stream.
pub fn sample_subset(rng: &mut ChaCha8Rng, pool: &VertexSet, k: usize) -> VertexSet {
    assert!(k <= pool.card(), "subset larger than pool");
    let mut items = pool.to_vec();
    // partial Fisher-Yates: first k positions become the sample
    for i in 0..k {
        let j = rng.gen_range(i..items.len());
        items.swap(i, j);
    }
    VertexSet::from_indices(pool.universe(), items[..k].iter().copied())
}

/// Uniform disjoint pair of subsets of `pool` with the given sizes.
pub fn sample_disjoint_pair(
    rng: &mut ChaCha8Rng,
    pool: &VertexSet,
    k1: usize,
    k2: usize,
) -> (VertexSet, VertexSet) {
    let first = sample_subset(rng, pool, k1);
    let rest = pool.difference(&first);
    let second = sample_subset(rng, &rest, k2);
    (first, second)
}
