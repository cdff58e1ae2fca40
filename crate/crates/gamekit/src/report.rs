//! JSON reports for the atlas commands.

use gamekit_core::atlas::{self, Atlas, CountReport};
use gamekit_core::{eulerian, Digraph};
use serde::Serialize;

use crate::error::AppResult;

#[derive(Serialize)]
pub struct ClassJson {
    pub canon_hex: String,
    pub aut_order: usize,
    pub labeled_count: u64,
}

#[derive(Serialize)]
pub struct CensusJson {
    pub p: usize,
    pub labeled_total: u64,
    pub class_count: usize,
    pub orbit_counts_hold: bool,
    pub classes: Vec<ClassJson>,
}

#[derive(Serialize)]
pub struct DiameterJson {
    pub value: usize,
    pub n_squared: usize,
}

#[derive(Serialize)]
pub struct CountsJson {
    pub n: usize,
    pub binom: u128,
    pub pointed_lower_bound: u128,
    pub lower_bound_games: u128,
    pub is_lower_bound: String,
    pub is_lower_bound_value: f64,
    pub pointed_count: Option<u64>,
    pub total: Option<u64>,
    pub identity_holds: Option<bool>,
    pub published_pointed: Option<u64>,
    pub published_total: Option<u64>,
}

#[derive(Serialize)]
pub struct ReportJson {
    #[serde(flatten)]
    pub census: CensusJson,
    /// Eulerian subgraphs of the cyclic game; equals `labeled_total`.
    pub eulerian_oracle_total: u64,
    pub oracles_agree: bool,
    pub diameter: Option<DiameterJson>,
    pub parity_split: Option<[usize; 2]>,
    pub counts: CountsJson,
    pub discrepancy: Option<String>,
}

pub fn census_data(a: &Atlas) -> CensusJson {
    CensusJson {
        p: a.p,
        labeled_total: a.labeled_total,
        class_count: a.classes.len(),
        orbit_counts_hold: a.orbit_counts_hold(),
        classes: a
            .classes
            .iter()
            .map(|c| ClassJson { canon_hex: c.canon_hex.clone(), aut_order: c.aut_order, labeled_count: c.labeled_count })
            .collect(),
    }
}

fn to_text(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

pub fn census_json(a: &Atlas) -> AppResult<String> {
    Ok(to_text(&census_data(a)))
}

fn counts_data(c: &CountReport) -> CountsJson {
    CountsJson {
        n: c.n,
        binom: c.binom,
        pointed_lower_bound: c.pointed_lower_bound,
        lower_bound_games: c.lower_bound_games,
        is_lower_bound: format!("{}/{}", c.is_lower_bound.0, c.is_lower_bound.1),
        is_lower_bound_value: c.is_lower_bound_f64(),
        pointed_count: c.pointed_count,
        total: c.total,
        identity_holds: c.identity_holds,
        published_pointed: c.published_pointed,
        published_total: c.published_total,
    }
}

/// Text naming every published figure that differs from the exact count.
pub fn discrepancy(c: &CountReport) -> Option<String> {
    let mut parts = Vec::new();
    if let (Some(exact), Some(publ)) = (c.pointed_count, c.published_pointed) {
        if exact != publ {
            parts.push(format!("exact pointed count {exact} differs from published {publ}"));
        }
    }
    if let (Some(exact), Some(publ)) = (c.total, c.published_total) {
        if exact != publ {
            parts.push(format!("exact labeled total {exact} differs from published {publ}"));
        }
    }
    (!parts.is_empty()).then(|| parts.join("; "))
}

pub fn full_report(p: usize) -> AppResult<ReportJson> {
    let a = atlas::census(p)?;
    let n = p / 2;
    let cyclic = Digraph::circulant(p, &(1..=n).collect::<Vec<_>>())?;
    let oracle = eulerian::count_eulerian_subgraphs(&cyclic)?;
    let small = p <= atlas::AtlasOptions::default().max_graph_p;
    let diameter = if small {
        let d = atlas::diameter(p)?;
        Some(DiameterJson { value: d.value, n_squared: n * n })
    } else {
        None
    };
    let parity_split = if small {
        let (x, y) = atlas::parity_bipartition(p)?;
        Some([x.len(), y.len()])
    } else {
        None
    };
    let c = atlas::count_report(n)?;
    Ok(ReportJson {
        oracles_agree: oracle == a.labeled_total,
        census: census_data(&a),
        eulerian_oracle_total: oracle,
        diameter,
        parity_split,
        discrepancy: discrepancy(&c),
        counts: counts_data(&c),
    })
}

pub fn full_report_json(p: usize) -> AppResult<String> {
    Ok(to_text(&full_report(p)?))
}
