use std::fs;
use std::path::{Path, PathBuf};

use disklink::generate::gen_maximal_planar;
use disklink::{Graph, GridDrawing, Point};
use dld::{
    cli_main_with, parse_drawing, parse_graph, parse_report, parse_rotation, render_svg,
    write_drawing, write_graph, write_rotation, ReportDocument, EXIT_INVALID, EXIT_OK, EXIT_USAGE,
};
use proptest::prelude::*;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn dld(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("dld").chain(args.iter().copied());
    let code = cli_main_with(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K4: &str = "n 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";

#[test]
fn k4_draw_and_verify() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k4.g", K4);
    let d = dir.path().join("k4.d");
    assert_eq!(
        dld(&["draw", "planar", "-i", s(&g), "-o", s(&d)]).code,
        EXIT_OK
    );
    let drawing = parse_drawing(&fs::read_to_string(&d).unwrap()).unwrap();
    assert_eq!(
        drawing,
        GridDrawing::from_coords(&[(0, 0), (4, 0), (2, 1), (2, 2)])
    );
    let r = dld(&["verify", "-i", s(&g), "-d", s(&d), "--planar"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("min_res_sq 1/2\n"));
    let doc = parse_report(&r.out).unwrap();
    assert_eq!((doc.width, doc.height), (5, 3));
    let j = dld(&["verify", "-i", s(&g), "-d", s(&d), "--planar", "--json"]);
    assert_eq!(ReportDocument::from_json(&j.out).unwrap(), doc);
}

#[test]
fn k5_is_not_planar() {
    let dir = TempDir::new().unwrap();
    let g = put(
        &dir,
        "k5.g",
        &write_graph(&disklink::generate::gen_complete(5).unwrap()),
    );
    let r = dld(&["draw", "planar", "-i", s(&g)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("not planar"), "{}", r.err);
}

#[test]
fn complete_four() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().join("k4.d");
    let g = dir.path().join("k4.g");
    assert_eq!(
        dld(&["draw", "complete", "-n", "4", "-o", s(&d)]).code,
        EXIT_OK
    );
    assert_eq!(
        dld(&["gen", "complete", "-n", "4", "-o", s(&g)]).code,
        EXIT_OK
    );
    let r = dld(&["verify", "-i", s(&g), "-d", s(&d)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("grid 65 x 65\n"), "{}", r.out);
}

#[test]
fn invalid_drawing_exits_one() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "p.g", "n 3\ne 0 1\n");
    let d = put(&dir, "p.d", "n 3\nv 0 0 0\nv 1 2 0\nv 2 1 0\n");
    let r = dld(&["verify", "-i", s(&g), "-d", s(&d)]);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(r.out.contains("valid false"));
    // missing position
    let d = put(&dir, "q.d", "n 3\nv 0 0 0\nv 1 2 0\n");
    let r = dld(&["verify", "-i", s(&g), "-d", s(&d)]);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(r.err.contains("vertex 2"), "{}", r.err);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(dld(&[]).code, EXIT_USAGE);
    assert_eq!(dld(&["draw", "sideways"]).code, EXIT_USAGE);
    assert_eq!(dld(&["gen", "cycle", "-n", "2"]).code, EXIT_USAGE);
    let bad = put(&dir, "bad.g", "n 2\ne 0 0\n");
    let r = dld(&["draw", "planar", "-i", s(&bad)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("line 2"), "{}", r.err);
    let r = dld(&["draw", "planar", "-i", s(&dir.path().join("absent.g"))]);
    assert_eq!(r.code, EXIT_USAGE);
    let g = put(&dir, "k4.g", K4);
    let d = put(&dir, "k4.d", "n 4\nv 0 0 0\nv 1 4 0\nv 2 2 1\nv 3 2 x\n");
    assert_eq!(dld(&["verify", "-i", s(&g), "-d", s(&d)]).code, EXIT_USAGE);
    let order = put(&dir, "o", "0 1\n");
    assert_eq!(
        dld(&["draw", "bandwidth", "-i", s(&g), "--order", s(&order)]).code,
        EXIT_USAGE
    );
    assert_eq!(
        dld(&["draw", "bandwidth", "-i", s(&g), "--rcm", "--exact"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        dld(&["render", "-i", s(&g), "-d", s(&d), "--scale", "0"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        dld(&["stretch", "-i", s(&g), "-d", s(&d), "-x", "2"]).code,
        EXIT_USAGE
    );
    assert_eq!(dld(&["--help"]).code, EXIT_OK);
}

#[test]
fn small_graphs_are_drawn_trivially() {
    let dir = TempDir::new().unwrap();
    for (text, n) in [("n 1\n", 1usize), ("n 2\ne 0 1\n", 2)] {
        let g = put(&dir, "s.g", text);
        let d = dir.path().join("s.d");
        assert_eq!(
            dld(&["draw", "planar", "-i", s(&g), "-o", s(&d)]).code,
            EXIT_OK
        );
        assert_eq!(
            parse_drawing(&fs::read_to_string(&d).unwrap()).unwrap().n(),
            n
        );
        assert_eq!(
            dld(&["verify", "-i", s(&g), "-d", s(&d), "--planar"]).code,
            EXIT_OK
        );
    }
}

#[test]
fn custom_embedding() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k4.g", K4);
    // 3 in the middle of the triangle 0, 1, 2
    let rot = put(
        &dir,
        "k4.rot",
        "rot 0 1 3 2\nrot 1 2 3 0\nrot 2 0 3 1\nrot 3 0 1 2\n",
    );
    let d = dir.path().join("k4.d");
    let r = dld(&["draw", "planar", "-i", s(&g), "-e", s(&rot), "-o", s(&d)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(
        dld(&["verify", "-i", s(&g), "-d", s(&d), "--planar"]).code,
        EXIT_OK
    );
    let bad = put(&dir, "bad.rot", "rot 0 1 2\n");
    assert_eq!(
        dld(&["draw", "planar", "-i", s(&g), "-e", s(&bad)]).code,
        EXIT_USAGE
    );
}

#[test]
fn bandwidth_and_stretch() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("c.g");
    assert_eq!(dld(&["gen", "cycle", "-n", "9", "-o", s(&g)]).code, EXIT_OK);
    for method in [&[][..], &["--rcm"], &["--exact"]] {
        let d = dir.path().join("c.d");
        let mut args = vec!["draw", "bandwidth", "-i", s(&g), "-o", s(&d)];
        args.extend_from_slice(method);
        assert_eq!(dld(&args).code, EXIT_OK);
        let r = dld(&["verify", "-i", s(&g), "-d", s(&d)]);
        assert_eq!(r.code, EXIT_OK);
        assert!(parse_report(&r.out).unwrap().min_res_sq().unwrap() >= disklink::Rational::one());
    }
    let order = put(&dir, "o", "0 1 8 2 7 3 6 4 5\n");
    let d = dir.path().join("o.d");
    assert_eq!(
        dld(&[
            "draw",
            "bandwidth",
            "-i",
            s(&g),
            "--order",
            s(&order),
            "-o",
            s(&d)
        ])
        .code,
        EXIT_OK
    );

    let sg = put(&dir, "t.g", "n 3\ne 0 1\ne 1 2\ne 0 2\n");
    let sd = put(&dir, "t.d", "n 3\nv 0 0 0\nv 1 2 0\nv 2 1 1\n");
    let r = dld(&["stretch", "-i", s(&sg), "-d", s(&sd)]);
    assert_eq!(r.code, EXIT_OK);
    let out = put(&dir, "t2.d", &r.out);
    let v = dld(&["verify", "-i", s(&sg), "-d", s(&out)]);
    assert!(parse_report(&v.out).unwrap().min_res_sq().unwrap() >= disklink::Rational::one());
    let r = dld(&["stretch", "-i", s(&sg), "-d", s(&sd), "-x", "3", "-y", "5"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(
        parse_drawing(&r.out).unwrap(),
        GridDrawing::from_coords(&[(0, 0), (6, 0), (3, 5)])
    );
    let r = dld(&["stretch", "-i", s(&sg), "-d", s(&sd), "-x", "1", "-y", "1"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn generators_are_deterministic() {
    let a = dld(&["gen", "maximal-planar", "-n", "10", "--seed", "7"]);
    let b = dld(&["gen", "maximal-planar", "-n", "10", "--seed", "7"]);
    assert_eq!(a.out, b.out);
    assert_eq!(parse_graph(&a.out).unwrap().m(), 24);
    let star = parse_graph(&dld(&["gen", "star", "-n", "4"]).out).unwrap();
    assert_eq!(star.edges(), &[(0, 1), (0, 2), (0, 3)]);
}

fn check_svg(g: &Graph, d: &GridDrawing, scale: u32) {
    let svg = render_svg(g, d, scale);
    let doc = roxmltree::Document::parse(&svg).expect("well-formed");
    let count = |tag: &str| doc.descendants().filter(|e| e.has_tag_name(tag)).count();
    assert_eq!(count("circle"), g.n());
    assert_eq!(count("line"), g.m());
    let r: f64 = doc
        .descendants()
        .find(|e| e.has_tag_name("circle"))
        .map_or(0.5 * scale as f64, |c| {
            c.attribute("r").unwrap().parse().unwrap()
        });
    assert_eq!(r, 0.5 * scale as f64);
}

#[test]
fn render_command() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k4.g", K4);
    let d = put(&dir, "k4.d", "n 4\nv 0 0 0\nv 1 4 0\nv 2 2 1\nv 3 2 2\n");
    let out = dir.path().join("k4.svg");
    assert_eq!(
        dld(&["render", "-i", s(&g), "-d", s(&d), "-o", s(&out)]).code,
        EXIT_OK
    );
    let svg = fs::read_to_string(&out).unwrap();
    assert!(svg.contains(r#"viewBox="0 0 120 80""#));
    check_svg(
        &parse_graph(K4).unwrap(),
        &parse_drawing(&fs::read_to_string(&d).unwrap()).unwrap(),
        20,
    );
}

fn drawing_strategy() -> impl Strategy<Value = GridDrawing> {
    prop::collection::vec(
        prop::option::weighted(0.9, (-1000i64..1000, -1000i64..1000)),
        0..30,
    )
    .prop_map(|v| {
        GridDrawing::from_partial(
            v.into_iter()
                .map(|p| p.map(|(x, y)| Point::new(x, y)))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn graph_round_trip(n in 3usize..60, seed in any::<u64>()) {
        let g = gen_maximal_planar(n, seed).unwrap();
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn drawing_round_trip(d in drawing_strategy()) {
        let text = write_drawing(&d);
        let back = parse_drawing(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(write_drawing(&back), text);
    }

    #[test]
    fn rotation_round_trip(n in 3usize..60, seed in any::<u64>()) {
        let pg = disklink::generate::gen_maximal_planar_embedded(n, seed).unwrap();
        let text = write_rotation(&pg);
        let rot = parse_rotation(&text, pg.graph()).unwrap();
        prop_assert_eq!(&rot, &pg.rotations());
        let back = disklink::PlaneGraph::from_rotation(pg.graph().clone(), rot, None).unwrap();
        prop_assert_eq!(write_rotation(&back), text);
    }

    #[test]
    fn svg_is_well_formed(n in 3usize..40, seed in any::<u64>(), scale in 1u32..40) {
        let g = gen_maximal_planar(n, seed).unwrap();
        let d = disklink::draw_planar(&g).unwrap().drawing;
        check_svg(&g, &d, scale);
    }
}
