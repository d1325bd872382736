use std::path::PathBuf;

use recoll::module::{find_isomorphism, projective, vertex_count};
use recoll::{Error, FieldSpec};
use recoll_cli::{Instance, UniverseSpec};

fn catalog(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(name)
}

fn parse(text: &str) -> Result<Instance, Error> {
    Instance::parse("test", text, None)
}

#[test]
fn one_vertex_quiver_is_the_field() {
    let inst = parse("field rationals\nquiver\n  vertices 1\n").unwrap();
    assert_eq!(inst.algebra.dim(), 1);
    assert_eq!(vertex_count(&inst.algebra).unwrap(), 1);
}

#[test]
fn catalog_files_load() {
    let dims = [("field.alg", 1), ("dual_numbers.alg", 2), ("a2.alg", 3), ("a3_rad2.alg", 5)];
    for (file, dim) in dims {
        let inst = Instance::from_path(&catalog(file), None).unwrap();
        assert_eq!(inst.algebra.dim(), dim, "{file}");
    }
    let a2 = Instance::from_path(&catalog("a2.alg"), None).unwrap();
    assert_eq!(a2.subcategory().unwrap().unwrap().gamma().dim(), 5);
}

#[test]
fn non_prime_field_rejected() {
    let e = parse("field gf 4\nquiver\n  vertices 1\n").unwrap_err();
    assert!(e.to_string().contains("prime"), "{e}");
    assert!(parse("field gf 7\nquiver\n  vertices 1\n").is_ok());
    assert!(parse("field reals\nquiver\n  vertices 1\n").is_err());
}

#[test]
fn field_override() {
    let inst = Instance::from_path(&catalog("a2.alg"), Some(FieldSpec::Prime(7))).unwrap();
    assert_eq!(inst.algebra.field(), FieldSpec::Prime(7));
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse("field rationals\nquiver\n  vertices 1 2\n  arrow a 1\n").unwrap_err();
    assert_eq!(e, Error::Syntax { line: 4, col: 3, msg: "expected `arrow NAME SOURCE TARGET`".into() });
    match parse("field rationals\nquivr\n").unwrap_err() {
        Error::Syntax { line: 2, col: 1, .. } => {}
        other => panic!("{other:?}"),
    }
    match parse("field rationals\nquiver\n  vertices 1\n  arrow a 1 1\nrelations\n  a*a - 1/x a*a\n").unwrap_err() {
        Error::Syntax { line: 6, col: 9, .. } => {}
        other => panic!("{other:?}"),
    }
    match parse("  vertices 1\n").unwrap_err() {
        Error::Syntax { line: 1, col: 3, .. } => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn semantic_errors_name_the_line() {
    let e = parse("field rationals\nquiver\n  vertices 1 2\n  arrow a 1 3\n").unwrap_err();
    assert!(matches!(&e, Error::Semantic(m) if m.starts_with("line 4")), "{e}");
    let e = parse("field rationals\nquiver\n  vertices 1\nsubcategory P7\n").unwrap_err();
    assert!(matches!(&e, Error::Semantic(m) if m.contains("P7")), "{e}");
    assert!(parse("quiver\n  vertices 1\n").is_err());
    assert!(parse("field rationals\n").is_err());
}

const SQUARE: &str = "field rationals
quiver
  vertices 1 2 3 4
  arrow a 1 2
  arrow b 2 4
  arrow c 1 3
  arrow d 3 4
relations
";

#[test]
fn relations_with_coefficients() {
    let free = parse(SQUARE).unwrap();
    assert_eq!(free.algebra.dim(), 10);
    let commutative = parse(&format!("{SQUARE}  a*b - c*d\n")).unwrap();
    assert_eq!(commutative.algebra.dim(), 9);
    let scaled = parse(&format!("{SQUARE}  -1/2 a*b + 3 c*d\n")).unwrap();
    assert_eq!(scaled.algebra.dim(), 9);
    let zero = parse(&format!("{SQUARE}  a*b\n  c*d\n")).unwrap();
    assert_eq!(zero.algebra.dim(), 8);
    assert!(parse(&format!("{SQUARE}  a*c\n")).is_err());
}

#[test]
fn path_length_is_searched() {
    let a3 = Instance::from_path(&catalog("a3_rad2.alg"), None).unwrap();
    assert_eq!(a3.algebra.dim(), 5);
    let explicit = parse("field rationals\nquiver\n  vertices 1 2\n  arrow a 1 2\nmax_path_length 1\n");
    assert!(explicit.is_err());
    let looped = parse("field rationals\nquiver\n  vertices 1\n  arrow x 1 1\n");
    assert!(looped.is_err());
}

#[test]
fn structure_constants() {
    let text = "field rationals
structure
  labels 1 x
  unit 1 0
  product 1 1 = 1 0
  product 1 x = 0 1
  product x 1 = 0 1
  block v = 1 0
modules
  R = regular
  S = simple v
subcategory R S
";
    let inst = parse(text).unwrap();
    assert_eq!(inst.algebra.dim(), 2);
    assert_eq!(vertex_count(&inst.algebra).unwrap(), 1);
    assert_eq!(inst.modules[1].1.dim(), 1);
    let bad = text.replace("product x 1 = 0 1", "product x 1 = 0 2");
    assert!(parse(&bad).is_err());
}

#[test]
fn modules_from_arrow_actions() {
    let text = "field rationals
quiver
  vertices 1 2
  arrow a 1 2
modules
  M dim 2
    act e1 = 1 0 ; 0 0
    act e2 = 0 0 ; 0 1
    act a = 0 1 ; 0 0
  N dim 1
    act e1 = 1
    act e2 = 0
    act a = 0
universe M N
";
    let inst = parse(text).unwrap();
    let p1 = projective(&inst.algebra, 0).unwrap();
    assert!(find_isomorphism(&inst.modules[0].1, &p1).unwrap().is_some());
    assert_eq!(inst.universe, UniverseSpec::Names(vec!["M".into(), "N".into()]));
    assert_eq!(inst.universe().unwrap().len(), 2);
    let wrong = text.replace("act a = 0 1 ; 0 0", "act a = 0 0 ; 1 0");
    assert!(parse(&wrong).is_err());
    let ragged = text.replace("act a = 0 1 ; 0 0", "act a = 0 1 ; 0");
    assert!(parse(&ragged).is_err());
    let short = text.replace("    act e1 = 1\n    act e2 = 0\n", "");
    assert!(parse(&short).is_err());
}

#[test]
fn repeated_universe_members_rejected() {
    let text = "field rationals
quiver
  vertices 1 2
  arrow a 1 2
modules
  X = simple 1
  Y = injective 1
universe X Y
";
    assert!(parse(text).is_err());
}

#[test]
fn task_parameters() {
    let inst = Instance::from_path(&catalog("a3_rad2.alg"), None).unwrap();
    assert_eq!(inst.n, Some(2));
    assert_eq!(inst.subcategory.as_deref().unwrap(), ["P1", "P2", "S3", "S1"]);
    assert!(parse("field rationals\nquiver\n  vertices 1\ntask\n  n 0\n").is_err());
    assert!(parse("field rationals\nquiver\n  vertices 1\ntask\n  k 2\n").is_err());
}
