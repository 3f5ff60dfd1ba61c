//! Per-graph verdict records for the batch scanner.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::metric::all_pairs_distances;
use crate::properties::{
    enumerate_2cuts, is_distance_balanced, is_partial_cube, is_strongly_distance_balanced,
    vertex_connectivity, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub connected: bool,
    pub bipartite: bool,
    pub min_degree: usize,
    pub distance_balanced: bool,
    pub strongly_db: bool,
    pub partial_cube: bool,
    pub vertex_connectivity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub record_index: usize,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub flags: Flags,
    /// Distance across the minimal 2-cut, present only when the graph
    /// has vertex connectivity exactly 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut_distance: Option<u16>,
    /// Whether the graph is a cycle (2-regular and connected).
    pub cycle: bool,
    /// Bipartite, distance-balanced, connectivity 2 and not a cycle.
    pub candidate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Runs the full predicate battery on one decoded graph.
pub fn analyze_graph(record_index: usize, g: &Graph) -> Result<ScanReport> {
    let graph6 = graph6::encode(g)?;
    let connected = g.is_connected();
    let bipartite = g.is_bipartite();
    let min_degree = g.min_degree();
    let cycle = g.is_cycle();

    let (db, sdb, pcube, conn, cut_distance, witness);
    if connected && g.order() >= 2 {
        let dm = all_pairs_distances(g);
        let db_verdict = is_distance_balanced(g, &dm)?;
        db = db_verdict.holds;
        witness = db_verdict.witness;
        sdb = is_strongly_distance_balanced(g, &dm)?.holds;
        pcube = is_partial_cube(g, &dm)?.holds;
        conn = vertex_connectivity(g)?;
        cut_distance = if conn == 2 {
            enumerate_2cuts(g, &dm)?.first().map(|c| c.distance)
        } else {
            None
        };
    } else {
        db = false;
        sdb = false;
        pcube = false;
        conn = 0;
        cut_distance = None;
        witness = None;
    }

    let candidate = connected && bipartite && db && conn == 2 && !cycle;
    Ok(ScanReport {
        record_index,
        graph6,
        order: g.order(),
        size: g.size(),
        flags: Flags {
            connected,
            bipartite,
            min_degree,
            distance_balanced: db,
            strongly_db: sdb,
            partial_cube: pcube,
            vertex_connectivity: conn,
        },
        cut_distance,
        cycle,
        candidate,
        witness,
    })
}

/// Decodes one graph6 record and analyzes it.
pub fn analyze_record(record_index: usize, record: &str) -> Result<ScanReport> {
    let g = graph6::decode(record)?;
    analyze_graph(record_index, &g)
}
