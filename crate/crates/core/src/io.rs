//! File formats: the JSON crease-pattern format, flip-graph and coloring
//! JSON, CSV emission for mixing reports, and run manifests for reproducible
//! randomized commands.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::{Crease, CreaseClass, CreasePattern, Family, MvAssignment};

#[derive(Debug, Serialize, Deserialize)]
pub struct PatternFile {
    pub vertices_coords: Vec<[f64; 2]>,
    pub edges_vertices: Vec<[usize; 2]>,
    /// One entry per crease: "M", "V", or "U" for unassigned.
    pub edges_assignment: Vec<String>,
    pub faces_vertices: Vec<Vec<usize>>,
    pub frame_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame_theta: Option<f64>,
}

pub fn pattern_to_file(
    pattern: &CreasePattern,
    assignment: Option<&MvAssignment>,
) -> PatternFile {
    let edges_assignment = match assignment {
        Some(a) => (0..pattern.crease_count())
            .map(|i| if a.is_valley(i) { "V".to_string() } else { "M".to_string() })
            .collect(),
        None => vec!["U".to_string(); pattern.crease_count()],
    };
    PatternFile {
        vertices_coords: pattern.vertices().to_vec(),
        edges_vertices: pattern.creases().iter().map(|c| c.endpoints).collect(),
        edges_assignment,
        faces_vertices: pattern.faces().to_vec(),
        frame_class: pattern.family().tag().to_string(),
        frame_theta: pattern.theta(),
    }
}

pub fn save_pattern(pattern: &CreasePattern, assignment: Option<&MvAssignment>) -> String {
    serde_json::to_string_pretty(&pattern_to_file(pattern, assignment)).expect("serializable")
}

fn family_from_tag(tag: &str) -> Family {
    match tag {
        "square_grid" => Family::SquareGrid,
        "square_twist" => Family::SquareTwist,
        "miura" => Family::Miura,
        "triangle" => Family::Triangle,
        "kite" => Family::Kite,
        "single_vertex" => Family::SingleVertex,
        _ => Family::Custom,
    }
}

/// Crease class from edge direction, refined by the family tag where the
/// generators distinguish non-axis classes.
fn derive_class(family: Family, dx: f64, dy: f64) -> CreaseClass {
    let angle = dy.atan2(dx).rem_euclid(std::f64::consts::PI);
    let tol = 1e-9;
    if angle < tol || (std::f64::consts::PI - angle).abs() < tol {
        return CreaseClass::Horizontal;
    }
    if (angle - std::f64::consts::FRAC_PI_2).abs() < tol {
        return CreaseClass::Vertical;
    }
    match family {
        Family::Miura => CreaseClass::Zigzag,
        Family::SingleVertex => CreaseClass::Spoke,
        Family::Triangle => {
            if angle < std::f64::consts::FRAC_PI_2 {
                CreaseClass::Zigzag
            } else {
                CreaseClass::Diagonal
            }
        }
        _ => {
            if (angle - std::f64::consts::FRAC_PI_4).abs() < tol
                || (angle - 3.0 * std::f64::consts::FRAC_PI_4).abs() < tol
            {
                CreaseClass::Diagonal
            } else {
                CreaseClass::Zigzag
            }
        }
    }
}

pub fn load_pattern(json: &str) -> Result<(CreasePattern, Option<MvAssignment>)> {
    let file: PatternFile = serde_json::from_str(json)?;
    pattern_from_file(&file)
}

pub fn pattern_from_file(file: &PatternFile) -> Result<(CreasePattern, Option<MvAssignment>)> {
    if file.edges_assignment.len() != file.edges_vertices.len() {
        return Err(Error::MalformedPattern(
            "edges_assignment length differs from edges_vertices".into(),
        ));
    }
    let family = family_from_tag(&file.frame_class);
    let creases: Vec<Crease> = file
        .edges_vertices
        .iter()
        .map(|&[a, b]| {
            let (pa, pb) = (file.vertices_coords[a], file.vertices_coords[b]);
            Crease {
                endpoints: [a, b],
                class: derive_class(family, pb[0] - pa[0], pb[1] - pa[1]),
            }
        })
        .collect();
    let pattern = CreasePattern::from_faces(
        file.vertices_coords.clone(),
        creases,
        file.faces_vertices.clone(),
        family,
        file.frame_theta,
    )?;
    let assignment = if file.edges_assignment.iter().any(|s| s == "U") {
        if file.edges_assignment.iter().all(|s| s == "U") {
            None
        } else {
            return Err(Error::MalformedPattern(
                "partially assigned patterns are not supported by the loader".into(),
            ));
        }
    } else {
        let mut a = MvAssignment::all_mountain(pattern.crease_count());
        for (i, s) in file.edges_assignment.iter().enumerate() {
            match s.as_str() {
                "M" => {}
                "V" => a.set(i, crate::pattern::VALLEY),
                other => {
                    return Err(Error::MalformedPattern(format!(
                        "unexpected edge assignment {other:?}"
                    )))
                }
            }
        }
        Some(a)
    };
    Ok((pattern, assignment))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphFile {
    /// States as M/V strings in canonical order.
    pub states: Vec<String>,
    /// Edges as [state, state, face]; one record per face label.
    pub edges: Vec<[usize; 3]>,
}

pub fn graph_to_file(graph: &crate::flipgraph::FlipGraph) -> GraphFile {
    let mut edges = Vec::new();
    for (i, nbrs) in graph.adjacency.iter().enumerate() {
        for &(j, face) in nbrs {
            if i < j {
                edges.push([i, j, face]);
            }
        }
    }
    GraphFile { states: graph.states.iter().map(|s| s.to_string()).collect(), edges }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ColoringFile {
    pub rows: usize,
    pub cols: usize,
    /// Pinned vertex as [row, col, color].
    pub anchor: [usize; 3],
    /// Row-major colors, row 0 first (bottom row).
    pub colors: Vec<Vec<u8>>,
}

pub fn coloring_to_file(coloring: &crate::coloring::GridColoring) -> ColoringFile {
    let colors = (0..coloring.rows)
        .map(|r| (0..coloring.cols).map(|c| coloring.at(r, c)).collect())
        .collect();
    ColoringFile {
        rows: coloring.rows,
        cols: coloring.cols,
        anchor: [coloring.rows - 1, 0, 0],
        colors,
    }
}

pub fn coloring_from_file(file: &ColoringFile) -> Result<crate::coloring::GridColoring> {
    let mut colors = Vec::with_capacity(file.rows * file.cols);
    if file.colors.len() != file.rows {
        return Err(Error::ImproperColoring("row count mismatch".into()));
    }
    for row in &file.colors {
        if row.len() != file.cols {
            return Err(Error::ImproperColoring("column count mismatch".into()));
        }
        colors.extend_from_slice(row);
    }
    let coloring =
        crate::coloring::GridColoring { rows: file.rows, cols: file.cols, colors };
    coloring.validate()?;
    Ok(coloring)
}

/// Mixing report CSV, header version 1: size,faces,omega,tmix,gap,normalized.
pub fn mix_rows_to_csv(rows: &[crate::chain::MixRow]) -> String {
    let mut out = String::from("size,faces,omega,tmix,gap,normalized\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.12},{:.12}\n",
            r.size, r.faces, r.omega, r.tmix, r.gap, r.normalized
        ));
    }
    out
}

/// FNV-1a 64-bit digest, hex encoded; used to fingerprint outputs in run
/// manifests.
pub fn fnv64_hex(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ManifestOutput {
    pub path: String,
    pub fnv64: String,
}

/// Record of one randomized command: rerunning with the same seed reproduces
/// byte-identical primary outputs.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub argv: Vec<String>,
    pub seed: u64,
    pub version: String,
    pub timestamp_unix: u64,
    pub outputs: Vec<ManifestOutput>,
}

impl RunManifest {
    pub fn new(command: &str, argv: Vec<String>, seed: u64) -> Self {
        RunManifest {
            command: command.to_string(),
            argv,
            seed,
            version: crate::VERSION.to_string(),
            timestamp_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            outputs: Vec::new(),
        }
    }

    pub fn record(&mut self, path: &str, contents: &[u8]) {
        self.outputs.push(ManifestOutput { path: path.to_string(), fnv64: fnv64_hex(contents) });
    }
}
