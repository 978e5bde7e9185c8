use archi_mellin::*;

fn fixture() -> WhittakerSpec {
    WhittakerSpec::gl3_monomial(5, 0, 1, [3, 0, 2]).unwrap()
}

#[test]
fn self_test_passes_and_cache_round_trips() {
    let g = build_grid(&fixture(), &GridGeometry::square(-4.0, 3.0, 120)).unwrap();
    assert!(g.report.passed && g.report.probes == 50);
    assert!(g.report.max_error <= 1e-8);
    // node values are the direct values
    let ev = WhittakerEvaluator::new(&fixture(), &Contours::default()).unwrap();
    let (u1, u2) = (g.geometry.u1_at(37), g.geometry.u2_at(81));
    assert_eq!(ev.eval_grid(&[u1], &[u2])[0], g.value(37, 81));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.grid");
    g.save(&path).unwrap();
    let back = WhittakerGrid::load(&path).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.to_bytes(), g.to_bytes());
    let a = g.interpolate(0.7, 1.3).unwrap();
    assert_eq!(back.interpolate(0.7, 1.3).unwrap(), a);
    assert!(g.interpolate(100.0, 1.0).is_err());
}

#[test]
fn rebuild_is_bit_exact() {
    let geom = GridGeometry::square(-3.0, 2.0, 70);
    let opts = GridOptions { probes: 5, ..GridOptions::default() };
    let a = build_grid_with(&fixture(), &geom, &Contours::default(), &opts).unwrap();
    let b = build_grid_with(&fixture(), &geom, &Contours::default(), &opts).unwrap();
    assert_eq!(a.to_bytes(), b.to_bytes());
}

#[test]
fn coarse_grid_is_rejected() {
    let geom = GridGeometry::square(-5.0, 4.0, 12);
    let opts = GridOptions { order: 4, probes: 10, ..GridOptions::default() };
    let err = build_grid_with(&fixture(), &geom, &Contours::default(), &opts).unwrap_err();
    assert!(matches!(err, MellinError::GridRejected(_)), "{err}");
}

#[test]
fn corrupt_cache_is_rejected() {
    let geom = GridGeometry::square(-1.0, 1.0, 12);
    let opts = GridOptions { order: 4, probes: 0, ..GridOptions::default() };
    let g = build_grid_with(&fixture(), &geom, &Contours::default(), &opts).unwrap();
    let bytes = g.to_bytes();
    assert!(WhittakerGrid::from_bytes(&bytes[..bytes.len() - 3]).is_err());
    let mut bad = bytes.clone();
    bad[0] = b'X';
    assert!(matches!(WhittakerGrid::from_bytes(&bad), Err(MellinError::CacheFormat(_))));
}

#[test]
fn cache_directory_hits_on_second_use() {
    let dir = tempfile::tempdir().unwrap();
    let geom = GridGeometry::square(-1.0, 1.0, 12);
    let opts = GridOptions { order: 4, probes: 0, ..GridOptions::default() };
    let c = Contours::default();
    let (a, hit_a) = cached_grid(dir.path(), &fixture(), &geom, &c, &opts).unwrap();
    let (b, hit_b) = cached_grid(dir.path(), &fixture(), &geom, &c, &opts).unwrap();
    assert!(!hit_a && hit_b);
    assert_eq!(a, b);
    let other = GridGeometry::square(-1.0, 1.0, 14);
    assert_ne!(cache_key(&fixture(), &geom, &c, &opts), cache_key(&fixture(), &other, &c, &opts));
}
