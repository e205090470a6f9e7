//! Command-line front end: parse a length vector, run an analysis, print a
//! JSON report (stdout) with diagnostics on stderr.
//!
//! Exit codes: 0 success, 2 non-generic input, 3 empty polytope, 4 usage
//! error. Reports are byte-stable for a fixed input and version; timing is
//! opt-in via `--timing` because it would break that guarantee.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chaintope::{
    blind_blind_identify, bott_data, characteristic_function, classify_flagtope, enumerate_cells,
    euler_characteristic, is_aspherical, moment_hrep, parse_length_vector, reduced_hrep,
    reduced_vertices, small_cover_cells, top_cell_flag_report, verify_characteristic, vertices,
    ClassWitness, Error, FacePoset, HalfspaceSystem, LengthVector, PaninaMode, PolytopeClassTag,
    Rational,
};

#[derive(Parser)]
#[command(
    name = "chaintope",
    version,
    about = "Exact combinatorics of planar chain spaces: short codes, moment polytopes, \
             small covers, and polygon-space cell complexes",
    after_help = "Vectors are comma-separated positive rationals, e.g. `1,1,3,3,3` or \
                  `1/2,2,2,5/3`; the last entry is the anchor length. Enumeration caps can \
                  be raised with the CHAINTOPE_MAX_M environment variable."
)]
struct Cli {
    /// Include wall-clock timing in the report (breaks byte-stability)
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Short code of a generic length vector
    Shortcode { vector: String },
    /// Moment polytope: facets, f-vector, exact vertices
    Polytope {
        vector: String,
        /// Emit a cdd-style H-representation (`ine`) instead of JSON
        #[arg(long, value_enum)]
        export: Option<ExportFormat>,
    },
    /// Flagtope classification and asphericality of the chain space
    Classify { vector: String },
    /// Characteristic matrix of the small cover over Q(alpha)
    Charmatrix { vector: String },
    /// Small-cover cell counts, characteristic and Bott data
    Smallcover { vector: String },
    /// Cell census of the polygon-space complex
    Panina {
        vector: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Bicyclic)]
        mode: ModeArg,
    },
    /// Run the built-in worked examples and report pass/fail
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Ine,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Cyclic,
    Bicyclic,
}

impl From<ModeArg> for PaninaMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Cyclic => PaninaMode::Cyclic,
            ModeArg::Bicyclic => PaninaMode::Bicyclic,
        }
    }
}

fn rational_string(r: &Rational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Serialize)]
struct Header {
    schema: u32,
    command: &'static str,
    input: Vec<String>,
    normalized: Vec<String>,
    /// original 1-based position of each normalized side entry
    permutation: Vec<usize>,
    m: usize,
    generic: bool,
}

fn header(
    command: &'static str,
    input: &LengthVector,
    normalized: &LengthVector,
    perm: &[usize],
) -> Header {
    Header {
        schema: 1,
        command,
        input: input.entries().iter().map(rational_string).collect(),
        normalized: normalized.entries().iter().map(rational_string).collect(),
        permutation: perm.to_vec(),
        m: input.m(),
        generic: true,
    }
}

#[derive(Serialize)]
struct ShortCodeReport {
    #[serde(flatten)]
    header: Header,
    short_code: Vec<Vec<usize>>,
    short_code_display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct FacetRow {
    label: String,
    normal: Vec<String>,
    offset: String,
}

#[derive(Serialize)]
struct VertexRow {
    label: String,
    coordinates: Vec<String>,
}

#[derive(Serialize)]
struct PolytopeReport {
    #[serde(flatten)]
    header: Header,
    short_code: Vec<Vec<usize>>,
    facet_count: usize,
    f_vector: Vec<usize>,
    facets: Vec<FacetRow>,
    equalities: Vec<FacetRow>,
    vertex_count: usize,
    vertices: Vec<VertexRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct ClassifyReport {
    #[serde(flatten)]
    header: Header,
    short_code: Vec<Vec<usize>>,
    short_code_display: String,
    class: String,
    dim: usize,
    torus_code: bool,
    witness: String,
    aspherical: bool,
    aspherical_pattern: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct CharMatrixReport {
    #[serde(flatten)]
    header: Header,
    facet_order: Vec<String>,
    characteristic_matrix: Vec<Vec<u8>>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct BottReport {
    facet_order: Vec<String>,
    block_matrix: Vec<Vec<u8>>,
    bott_matrix: Vec<Vec<u8>>,
}

#[derive(Serialize)]
struct SmallCoverReport {
    #[serde(flatten)]
    header: Header,
    facet_order: Vec<String>,
    characteristic_matrix: Vec<Vec<u8>>,
    verified: bool,
    cells: Vec<u64>,
    euler: i64,
    bott: Option<BottReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct TopCellSummary {
    count: usize,
    facet_count_histogram: BTreeMap<usize, usize>,
    flag_count: usize,
    cube_count: usize,
}

#[derive(Serialize)]
struct PaninaReport {
    #[serde(flatten)]
    header: Header,
    mode: String,
    cell_counts: Vec<usize>,
    euler: i64,
    top_cells: Option<TopCellSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

fn print_json<T: Serialize>(report: &T) {
    println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
}

fn parse_input(vector: &str) -> Result<(LengthVector, LengthVector, Vec<usize>), Error> {
    let input = parse_length_vector(vector)?;
    let (normalized, perm) = input.normalized();
    if !normalized.is_generic() {
        return Err(Error::NonGeneric);
    }
    Ok((input, normalized, perm))
}

fn facet_rows(system: &HalfspaceSystem) -> (Vec<FacetRow>, Vec<FacetRow>) {
    let facets = system
        .inequalities
        .iter()
        .filter(|r| r.label.is_some())
        .map(|r| FacetRow {
            label: r.label.unwrap().to_string(),
            normal: r.normal.iter().map(rational_string).collect(),
            offset: rational_string(&r.offset),
        })
        .collect();
    let equalities = system
        .equalities
        .iter()
        .map(|(n, b)| FacetRow {
            label: "=".to_string(),
            normal: n.iter().map(rational_string).collect(),
            offset: rational_string(b),
        })
        .collect();
    (facets, equalities)
}

fn timing(enabled: bool, started: Instant) -> Option<u128> {
    enabled.then(|| started.elapsed().as_millis())
}

fn run(cli: Cli) -> Result<(), Error> {
    let started = Instant::now();
    match cli.command {
        Command::Shortcode { vector } => {
            let (input, normalized, perm) = parse_input(&vector)?;
            let code = normalized.short_code()?;
            print_json(&ShortCodeReport {
                header: header("shortcode", &input, &normalized, &perm),
                short_code: code.as_lists(),
                short_code_display: code.to_string(),
                timing_ms: timing(cli.timing, started),
            });
        }
        Command::Polytope { vector, export } => {
            let (input, normalized, perm) = parse_input(&vector)?;
            let system = moment_hrep(&normalized)?;
            if let Some(ExportFormat::Ine) = export {
                print!("{}", system.facet_subsystem().to_ine());
                return Ok(());
            }
            let code = normalized.short_code()?;
            let poset = FacePoset::build(&normalized)?;
            let verts = vertices(&normalized)?;
            let (facets, equalities) = facet_rows(&system);
            print_json(&PolytopeReport {
                header: header("polytope", &input, &normalized, &perm),
                short_code: code.as_lists(),
                facet_count: system.facet_count(),
                f_vector: poset.f_vector(),
                facets,
                equalities,
                vertex_count: verts.len(),
                vertices: verts
                    .iter()
                    .map(|v| VertexRow {
                        label: v.label.to_string(),
                        coordinates: v.coordinates.iter().map(rational_string).collect(),
                    })
                    .collect(),
                timing_ms: timing(cli.timing, started),
            });
        }
        Command::Classify { vector } => {
            let (input, normalized, perm) = parse_input(&vector)?;
            let class = classify_flagtope(&normalized)?;
            let verdict = is_aspherical(&normalized)?;
            let code = normalized.short_code()?;
            let witness = match &class.witness {
                ClassWitness::Code(c) => format!("code {c}"),
                ClassWitness::TriangleFace(j) => format!("triangular 2-face {j}"),
                ClassWitness::Reference(r) => format!("reference {r}"),
                ClassWitness::None => "none".to_string(),
            };
            print_json(&ClassifyReport {
                header: header("classify", &input, &normalized, &perm),
                short_code: code.as_lists(),
                short_code_display: code.to_string(),
                class: class.tag.to_string(),
                dim: class.dim,
                torus_code: class.from_torus_code,
                witness,
                aspherical: verdict.aspherical,
                aspherical_pattern: verdict.pattern.map(|p| p.to_string()),
                timing_ms: timing(cli.timing, started),
            });
        }
        Command::Charmatrix { vector } => {
            let (input, normalized, perm) = parse_input(&vector)?;
            let chi = characteristic_function(&normalized)?;
            let hrep = reduced_hrep(&normalized)?;
            let verts = reduced_vertices(&normalized)?;
            let verified = verify_characteristic(&hrep, &verts, &chi)?;
            let matrix = chi.matrix();
            print_json(&CharMatrixReport {
                header: header("charmatrix", &input, &normalized, &perm),
                facet_order: matrix.labels().iter().map(|l| l.to_string()).collect(),
                characteristic_matrix: matrix.entries(),
                verified,
                timing_ms: timing(cli.timing, started),
            });
        }
        Command::Smallcover { vector } => {
            let (input, normalized, perm) = parse_input(&vector)?;
            let chi = characteristic_function(&normalized)?;
            let hrep = reduced_hrep(&normalized)?;
            let verts = reduced_vertices(&normalized)?;
            let verified = verify_characteristic(&hrep, &verts, &chi)?;
            let (cells, euler) = small_cover_cells(&normalized)?;
            let matrix = chi.matrix();
            let bott = match bott_data(&normalized) {
                Ok((block, b)) => Some(BottReport {
                    facet_order: block.labels().iter().map(|l| l.to_string()).collect(),
                    block_matrix: block.entries(),
                    bott_matrix: b.entries().to_vec(),
                }),
                Err(Error::WrongCode) => None,
                Err(e) => return Err(e),
            };
            print_json(&SmallCoverReport {
                header: header("smallcover", &input, &normalized, &perm),
                facet_order: matrix.labels().iter().map(|l| l.to_string()).collect(),
                characteristic_matrix: matrix.entries(),
                verified,
                cells,
                euler,
                bott,
                timing_ms: timing(cli.timing, started),
            });
        }
        Command::Panina { vector, mode } => {
            // the polygon-space census does not normalize: cells live on the
            // vector as given
            let input = parse_length_vector(&vector)?;
            if !input.is_generic() {
                return Err(Error::NonGeneric);
            }
            let cx = enumerate_cells(&input, mode.into())?;
            let top_cells = if input.m() >= 5 {
                let report = top_cell_flag_report(&input, &cx)?;
                let mut histogram = BTreeMap::new();
                for r in &report {
                    *histogram.entry(r.facet_count).or_insert(0) += 1;
                }
                Some(TopCellSummary {
                    count: report.len(),
                    facet_count_histogram: histogram,
                    flag_count: report.iter().filter(|r| r.is_flag).count(),
                    cube_count: report.iter().filter(|r| r.is_cube).count(),
                })
            } else {
                None
            };
            let perm: Vec<usize> = (1..input.m()).collect();
            print_json(&PaninaReport {
                header: header("panina", &input, &input, &perm),
                mode: PaninaMode::from(mode).to_string(),
                cell_counts: cx.cell_counts(),
                euler: euler_characteristic(&cx),
                top_cells,
                timing_ms: timing(cli.timing, started),
            });
        }
        Command::Selftest => return selftest(),
    }
    Ok(())
}

fn check(name: &str, ok: bool, failures: &mut usize) {
    if ok {
        println!("ok — {name}");
    } else {
        println!("FAILED — {name}");
        *failures += 1;
    }
}

/// The worked examples as a smoke test.
fn selftest() -> Result<(), Error> {
    let lv = |e: &[i64]| LengthVector::from_ints(e).unwrap();
    let mut failures = 0usize;

    let code = |e: &[i64]| lv(e).short_code().unwrap().to_string();
    check(
        "short code of 1,1,3,3,3 is <{1,2,5}>",
        code(&[1, 1, 3, 3, 3]) == "<{1,2,5}>",
        &mut failures,
    );
    check(
        "short code of 1,2,2,5,3 is <{1,3,5}>",
        code(&[1, 2, 2, 5, 3]) == "<{1,3,5}>",
        &mut failures,
    );
    check(
        "short code of 1,3,3,3,1 is <{1,4,5}>",
        code(&[1, 3, 3, 3, 1]) == "<{1,4,5}>",
        &mut failures,
    );

    let tag = |e: &[i64]| classify_flagtope(&lv(e)).unwrap().tag;
    check(
        "1,1,3,3,3 is the 3-cube",
        tag(&[1, 1, 3, 3, 3]) == PolytopeClassTag::Cube,
        &mut failures,
    );
    check(
        "1,2,2,5,3 is the pentagonal prism",
        tag(&[1, 2, 2, 5, 3]) == PolytopeClassTag::PentagonPrism,
        &mut failures,
    );
    check(
        "1,3,3,3,1 is the hexagonal prism",
        tag(&[1, 3, 3, 3, 1]) == PolytopeClassTag::HexagonPrism,
        &mut failures,
    );
    check(
        "facet counts 6, 7, 8 for the three worked vectors",
        [(&[1i64, 1, 3, 3, 3], 6usize), (&[1, 2, 2, 5, 3], 7), (&[1, 3, 3, 3, 1], 8)]
            .iter()
            .all(|(e, n)| moment_hrep(&lv(*e)).unwrap().facet_count() == *n),
        &mut failures,
    );
    check(
        "face-lattice identification agrees on the three worked vectors",
        [
            (&[1i64, 1, 3, 3, 3], PolytopeClassTag::Cube),
            (&[1, 2, 2, 5, 3], PolytopeClassTag::PentagonPrism),
            (&[1, 3, 3, 3, 1], PolytopeClassTag::HexagonPrism),
        ]
        .iter()
        .all(|(e, t)| blind_blind_identify(&FacePoset::build(&lv(*e)).unwrap()).unwrap().tag == *t),
        &mut failures,
    );
    check(
        "torus-code vector classifies as the cube",
        {
            let c = classify_flagtope(&lv(&[1, 1, 1, 9, 2])).unwrap();
            c.tag == PolytopeClassTag::Cube && c.from_torus_code
        },
        &mut failures,
    );
    check(
        "asphericality verdicts on the worked vectors",
        is_aspherical(&lv(&[1, 1, 3, 3, 3])).unwrap().aspherical
            && is_aspherical(&lv(&[1, 1, 1, 9, 2])).unwrap().aspherical
            && !is_aspherical(&lv(&[1, 1, 1, 2])).unwrap().aspherical,
        &mut failures,
    );

    let chi = |e: &[i64]| characteristic_function(&lv(e)).unwrap().matrix().entries();
    check(
        "characteristic matrix of 1,2,2,2",
        chi(&[1, 2, 2, 2]) == vec![vec![1, 0, 1, 1], vec![0, 1, 0, 1]],
        &mut failures,
    );
    check(
        "characteristic matrix of 1,1,2,1",
        chi(&[1, 1, 2, 1]) == vec![vec![1, 0, 1, 1, 0], vec![0, 1, 0, 1, 1]],
        &mut failures,
    );
    check(
        "characteristic matrix of 2,2,2,1",
        chi(&[2, 2, 2, 1]) == vec![vec![1, 1, 0, 1, 1, 0], vec![0, 1, 1, 0, 1, 1]],
        &mut failures,
    );
    check(
        "reduced facet counts 4, 5, 6 for the matrix examples",
        [(&[1i64, 2, 2, 2], 4usize), (&[1, 1, 2, 1], 5), (&[2, 2, 2, 1], 6)]
            .iter()
            .all(|(e, n)| reduced_hrep(&lv(*e)).unwrap().facet_count() == *n),
        &mut failures,
    );
    check(
        "cube-code Bott matrix for 1,1,3,3,3",
        bott_data(&lv(&[1, 1, 3, 3, 3])).unwrap().1.entries()
            == [vec![0, 0, 1], vec![0, 0, 1], vec![0, 0, 0]],
        &mut failures,
    );
    check(
        "small-cover cells of 1,1,3,3,3 are (8,24,24,8) with Euler 0",
        small_cover_cells(&lv(&[1, 1, 3, 3, 3])).unwrap() == (vec![8, 24, 24, 8], 0),
        &mut failures,
    );

    let square = enumerate_cells(&lv(&[1, 1, 1, 2]), PaninaMode::Bicyclic).unwrap();
    check(
        "four-sided complex is a circle (3 vertices, 3 edges)",
        square.cell_counts() == vec![3, 3] && euler_characteristic(&square) == 0,
        &mut failures,
    );
    let eq5 = lv(&[1, 1, 1, 1, 1]);
    let penta = enumerate_cells(&eq5, PaninaMode::Bicyclic).unwrap();
    let penta_report = top_cell_flag_report(&eq5, &penta)?;
    check(
        "equilateral pentagon census (15,30,12), all 12 top cells pentagonal",
        penta.cell_counts() == vec![15, 30, 12]
            && euler_characteristic(&penta) == -3
            && penta_report.len() == 12
            && penta_report.iter().all(|r| r.facet_count == 5),
        &mut failures,
    );
    check(
        "six-sided complexes always have a non-flag top cell",
        {
            let vectors: [[i64; 6]; 4] = [
                [1, 1, 1, 1, 1, 2],
                [1, 1, 2, 2, 3, 2],
                [1, 2, 2, 3, 3, 4],
                [2, 2, 3, 3, 4, 5],
            ];
            vectors.iter().all(|e| {
                let alpha = lv(e);
                if !alpha.is_generic() {
                    return true;
                }
                let cx = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
                let report = top_cell_flag_report(&alpha, &cx).unwrap();
                report.is_empty() || report.iter().any(|r| !r.is_flag)
            })
        },
        &mut failures,
    );
    check(
        "seven-sided top cells have at most 7 < 8 facets",
        {
            let alpha = lv(&[1, 1, 2, 3, 3, 5, 8]);
            let cx = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
            top_cell_flag_report(&alpha, &cx)
                .unwrap()
                .iter()
                .all(|r| r.facet_count <= 7 && !r.is_flag)
        },
        &mut failures,
    );
    check(
        "vertex truncation identity from <{5}> to <{1,5}>",
        {
            let pa = FacePoset::build(&lv(&[1, 3, 3, 3, 9])).unwrap();
            let pb = FacePoset::build(&lv(&[1, 3, 3, 3, 5])).unwrap();
            chaintope::vertex_truncation_delta(&pa, &pb, 1).unwrap()
                && pa.f_vector() == vec![4, 6, 4]
                && pb.f_vector() == vec![6, 9, 5]
        },
        &mut failures,
    );

    if failures == 0 {
        println!("selftest: all checks passed");
        Ok(())
    } else {
        eprintln!("selftest: {failures} check(s) failed");
        std::process::exit(1);
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonGeneric => 2,
        Error::EmptyPolytope => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(4);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
