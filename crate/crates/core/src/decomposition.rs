//! Structural analysis around a minimal 2-cut: the good/bad vertex split,
//! the B and D layer partitions, and the horizontal/vertical edge
//! classification of the bad side with its counting identity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
use crate::properties::enumerate_2cuts;

/// Result of choosing the minimal 2-cut {a, b} and splitting the rest of
/// the graph around it. When the input lies outside the intended
/// hypotheses (bipartite, distance-balanced, non-cycle, not 3-connected)
/// the fields are still filled in descriptively and `hypothesis_ok` is
/// cleared instead of erroring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCutAnalysis {
    pub a: usize,
    pub b: usize,
    pub cut_distance: u16,
    /// Components of the graph minus {a, b}, sorted vertex lists.
    pub components: Vec<Vec<usize>>,
    /// All vertices on some shortest a-b path (always contains a and b).
    pub good_vertices: Vec<usize>,
    /// Index into `components` of the all-good component, if one exists.
    pub good_component: Option<usize>,
    /// Index into `components` of the all-bad component, if one exists.
    pub bad_component: Option<usize>,
    /// Exactly two components, one purely good and one purely bad.
    pub hypothesis_ok: bool,
}

/// Vertices lying on some shortest a-b path.
pub fn good_vertices(dm: &DistanceMatrix, a: usize, b: usize) -> Result<Vec<usize>> {
    if a == b {
        return Err(Error::SameVertex(a));
    }
    (0..dm.order())
        .map(|c| dm.lies_on_shortest_path(a, b, c).map(|ok| (c, ok)))
        .filter_map(|r| match r {
            Ok((c, true)) => Some(Ok(c)),
            Ok((_, false)) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// Picks the 2-cut minimizing (d(a, b), a, b) and classifies the
/// components of the graph minus the cut into good and bad.
pub fn analyze_minimal_2cut(g: &Graph, dm: &DistanceMatrix) -> Result<TwoCutAnalysis> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let cuts = enumerate_2cuts(g, dm)?;
    let Some(cut) = cuts.first() else {
        return Err(Error::Is3Connected);
    };
    let (a, b) = (cut.a, cut.b);
    let components = g.components_excluding(&[a, b]);
    let good = good_vertices(dm, a, b)?;
    let mut is_good = vec![false; g.order()];
    for &v in &good {
        is_good[v] = true;
    }
    let mut good_component = None;
    let mut bad_component = None;
    for (idx, comp) in components.iter().enumerate() {
        if comp.iter().all(|&v| is_good[v]) {
            if good_component.is_none() {
                good_component = Some(idx);
            }
        } else if comp.iter().all(|&v| !is_good[v]) && bad_component.is_none() {
            bad_component = Some(idx);
        }
    }
    let hypothesis_ok =
        components.len() == 2 && good_component.is_some() && bad_component.is_some();
    Ok(TwoCutAnalysis {
        a,
        b,
        cut_distance: cut.distance,
        components,
        good_vertices: good,
        good_component,
        bad_component,
        hypothesis_ok,
    })
}

/// The B layers of the good component (global metric) and the D layers of
/// the bad component, the latter taken in the induced subgraph on the bad
/// component plus {a, b} whose own metric differs from the global one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LayerStructure {
    /// d(a, b) - 1; B_1..B_m index as b_layers[i - 1].
    pub m: usize,
    pub b_layers: Vec<Vec<usize>>,
    /// t + 1 is the a-b distance inside the induced subgraph.
    pub t: usize,
    /// D_1..D_t as d_layers[i - 1], global vertex ids.
    pub d_layers: Vec<Vec<usize>>,
    /// Every bad vertex lies on a shortest a-b path of the induced subgraph.
    pub all_bad_on_geodesics: bool,
}

/// Distances inside the induced subgraph on the bad component plus the
/// cut pair, along with the local ids of a and b.
fn bad_side_metric(
    g: &Graph,
    analysis: &TwoCutAnalysis,
) -> Result<(Graph, Vec<usize>, DistanceMatrix, usize, usize)> {
    let bad_idx = analysis
        .bad_component
        .ok_or_else(|| Error::StructureViolation("no all-bad component".into()))?;
    let mut verts = analysis.components[bad_idx].clone();
    verts.push(analysis.a);
    verts.push(analysis.b);
    let (sub, back) = g.induced_subgraph(&verts);
    let local_a = back.binary_search(&analysis.a).expect("a in subgraph");
    let local_b = back.binary_search(&analysis.b).expect("b in subgraph");
    let dm = all_pairs_distances(&sub);
    Ok((sub, back, dm, local_a, local_b))
}

pub fn build_layers(g: &Graph, dm: &DistanceMatrix, analysis: &TwoCutAnalysis) -> Result<LayerStructure> {
    if !analysis.hypothesis_ok {
        return Err(Error::StructureViolation(
            "two-cut split is not a pure good/bad two-component split".into(),
        ));
    }
    let (a, b) = (analysis.a, analysis.b);
    let m = analysis.cut_distance as usize - 1;
    let good_idx = analysis.good_component.expect("hypothesis_ok");
    let good_comp = &analysis.components[good_idx];
    let in_good: std::collections::HashSet<usize> = good_comp.iter().copied().collect();

    let mut b_layers = Vec::with_capacity(m);
    let mut covered = 0;
    for i in 1..=m {
        let from_a: Vec<usize> = dm
            .sphere(a, i as u16)?
            .into_iter()
            .filter(|v| in_good.contains(v))
            .collect();
        let from_b: Vec<usize> = dm
            .sphere(b, (m + 1 - i) as u16)?
            .into_iter()
            .filter(|v| in_good.contains(v))
            .collect();
        if from_a != from_b {
            return Err(Error::StructureViolation(format!(
                "B_{i} differs when layered from a and from b"
            )));
        }
        covered += from_a.len();
        b_layers.push(from_a);
    }
    if covered != good_comp.len() {
        return Err(Error::StructureViolation(
            "B layers do not partition the good component".into(),
        ));
    }
    // neighbors of B_i must stay within the adjacent layers
    for (i, layer) in b_layers.iter().enumerate() {
        let i = i + 1;
        for &x in layer {
            for &y in g.neighbors(x) {
                let ok = if y == a {
                    i == 1
                } else if y == b {
                    i == m
                } else if in_good.contains(&y) {
                    let dy = dm.dist(a, y) as usize;
                    dy + 1 == i || dy == i + 1
                } else {
                    false
                };
                if !ok {
                    return Err(Error::StructureViolation(format!(
                        "vertex {x} in B_{i} has a neighbor {y} outside adjacent layers"
                    )));
                }
            }
        }
    }

    let (_, back, sub_dm, local_a, local_b) = bad_side_metric(g, analysis)?;
    let tt = sub_dm.dist(local_a, local_b);
    if tt == UNREACHABLE || tt == 0 {
        return Err(Error::StructureViolation(
            "cut vertices not joined through the bad component".into(),
        ));
    }
    let t = tt as usize - 1;
    let bad_idx = analysis.bad_component.expect("hypothesis_ok");
    let bad_len = analysis.components[bad_idx].len();
    let all_bad_on_geodesics = (0..sub_dm.order()).all(|v| {
        sub_dm.dist(local_a, v) != UNREACHABLE
            && sub_dm.dist(local_a, v) + sub_dm.dist(v, local_b) == tt
    });
    let mut d_layers = Vec::with_capacity(t);
    let mut d_covered = 0;
    for i in 1..=t {
        let mut from_a: Vec<usize> = (0..sub_dm.order())
            .filter(|&v| v != local_a && v != local_b && sub_dm.dist(local_a, v) == i as u16)
            .map(|v| back[v])
            .collect();
        from_a.sort_unstable();
        if all_bad_on_geodesics {
            let mut from_b: Vec<usize> = (0..sub_dm.order())
                .filter(|&v| {
                    v != local_a && v != local_b && sub_dm.dist(local_b, v) == (t + 1 - i) as u16
                })
                .map(|v| back[v])
                .collect();
            from_b.sort_unstable();
            if from_a != from_b {
                return Err(Error::StructureViolation(format!(
                    "D_{i} differs when layered from a and from b"
                )));
            }
        }
        d_covered += from_a.len();
        d_layers.push(from_a);
    }
    if all_bad_on_geodesics && d_covered != bad_len {
        return Err(Error::StructureViolation(
            "D layers do not partition the bad component".into(),
        ));
    }
    Ok(LayerStructure {
        m,
        b_layers,
        t,
        d_layers,
        all_bad_on_geodesics,
    })
}

/// d(x, y) = d(a, b) - 2 for every x in B_1 and y in B_m.
pub fn check_lemma_3_1(
    dm: &DistanceMatrix,
    analysis: &TwoCutAnalysis,
    layers: &LayerStructure,
) -> bool {
    if layers.m < 1 {
        return false;
    }
    let first = &layers.b_layers[0];
    let last = &layers.b_layers[layers.m - 1];
    first.iter().all(|&x| {
        last.iter()
            .all(|&y| x == y || dm.dist(x, y) == analysis.cut_distance - 2)
    })
}

/// An edge of the bad-side subgraph, classified by how its endpoints'
/// distances to a and b (in that subgraph) relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeClass {
    /// `right` is strictly closer to both a and b.
    Horizontal { left: usize, right: usize },
    /// `upper` is strictly closer to a and strictly farther from b.
    Vertical { upper: usize, lower: usize },
}

impl EdgeClass {
    pub fn endpoints(&self) -> (usize, usize) {
        match *self {
            EdgeClass::Horizontal { left, right } => (left, right),
            EdgeClass::Vertical { upper, lower } => (upper, lower),
        }
    }
}

/// Classifies every edge of the bad-side subgraph as horizontal or
/// vertical using that subgraph's own metric. Vertex ids are global.
pub fn classify_edges(g: &Graph, analysis: &TwoCutAnalysis) -> Result<Vec<EdgeClass>> {
    let (sub, back, sub_dm, local_a, local_b) = bad_side_metric(g, analysis)?;
    let mut classes = Vec::with_capacity(sub.size());
    for (x, y) in sub.edges() {
        let (xa, xb) = (sub_dm.dist(x, local_a), sub_dm.dist(x, local_b));
        let (ya, yb) = (sub_dm.dist(y, local_a), sub_dm.dist(y, local_b));
        let (gx, gy) = (back[x], back[y]);
        let class = if xa == ya + 1 && xb == yb + 1 {
            EdgeClass::Horizontal { left: gx, right: gy }
        } else if ya == xa + 1 && yb == xb + 1 {
            EdgeClass::Horizontal { left: gy, right: gx }
        } else if xa + 1 == ya && xb == yb + 1 {
            EdgeClass::Vertical { upper: gx, lower: gy }
        } else if ya + 1 == xa && yb == xb + 1 {
            EdgeClass::Vertical { upper: gy, lower: gx }
        } else {
            return Err(Error::StructureViolation(format!(
                "edge ({gx}, {gy}) fits neither the horizontal nor the vertical pattern"
            )));
        };
        classes.push(class);
    }
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCheckReport {
    pub holds: bool,
    /// First failing edge (global ids), if any.
    pub first_failure: Option<(usize, usize)>,
}

/// For every horizontal edge, the half-set of the left vertex stays
/// inside the bad component; for every vertical edge, the size of that
/// half-set's intersection with the bad component matches the layer-sum
/// counting formula. Distances to a and b come from the bad-side
/// subgraph; half-sets come from the global metric.
pub fn check_prop_4_1(
    g: &Graph,
    dm: &DistanceMatrix,
    analysis: &TwoCutAnalysis,
    layers: &LayerStructure,
    classes: &[EdgeClass],
) -> Result<EdgeCheckReport> {
    let (_, back, sub_dm, local_a, local_b) = bad_side_metric(g, analysis)?;
    let mut local_of = vec![usize::MAX; g.order()];
    for (local, &global) in back.iter().enumerate() {
        local_of[global] = local;
    }
    let bad_idx = analysis
        .bad_component
        .ok_or_else(|| Error::StructureViolation("no all-bad component".into()))?;
    let mut in_bad = vec![false; g.order()];
    for &v in &analysis.components[bad_idx] {
        in_bad[v] = true;
    }
    let n = g.order();
    if n % 2 != 0 {
        return Err(Error::StructureViolation("odd order".into()));
    }
    let half = (n / 2) as i64;
    let m = layers.m as i64;
    let d_ab = sub_dm.dist(local_a, local_b) as i64;
    let b_size = |j: i64| -> i64 {
        if j == 0 || j == m + 1 {
            1
        } else if j >= 1 && j <= m {
            layers.b_layers[(j - 1) as usize].len() as i64
        } else {
            0
        }
    };

    for class in classes {
        let (failure, ok) = match *class {
            EdgeClass::Horizontal { left, right } => {
                let w = dm.half_set(left, right)?;
                ((left, right), w.iter().all(|&z| in_bad[z]))
            }
            EdgeClass::Vertical { upper, lower } => {
                let xa = sub_dm.dist(local_of[upper], local_a) as i64;
                let yb = sub_dm.dist(local_of[lower], local_b) as i64;
                let ell_num = d_ab + xa - yb + 1;
                if ell_num % 2 != 0 {
                    return Err(Error::StructureViolation(format!(
                        "odd numerator in the index formula at edge ({upper}, {lower})"
                    )));
                }
                let ell = ell_num / 2;
                if (d_ab + m + 1) % 2 != 0 {
                    return Err(Error::StructureViolation(
                        "odd numerator in the layer-sum bound".into(),
                    ));
                }
                let top = (d_ab + m + 1) / 2 - ell;
                let sum: i64 = (0..=top.max(-1)).map(b_size).sum();
                let expected = half - sum;
                let actual = dm
                    .half_set(upper, lower)?
                    .iter()
                    .filter(|&&z| in_bad[z])
                    .count() as i64;
                ((upper, lower), actual == expected)
            }
        };
        if !ok {
            return Ok(EdgeCheckReport {
                holds: false,
                first_failure: Some(failure),
            });
        }
    }
    Ok(EdgeCheckReport {
        holds: true,
        first_failure: None,
    })
}
