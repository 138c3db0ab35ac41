use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn run(code: &str) {
    Python::attach(|py| {
        let globals = PyDict::new(py);
        globals.set_item("gkz", wrap_pymodule!(gkz::gkz)(py)).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python assertion failed");
        }
    });
}

#[test]
fn plane_example_through_python() {
    run(r#"
a = gkz.Configuration([[1, 1, 1, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 1, -2]])
assert a.volume() == 4
assert len(a.initial_ideals()) == 9
c = a.construct()
assert c.beta == ["1 + a5", "0", "-1 - 2*a5"]
assert c.gale == [[1, 2], [-1, 1], [-1, -1], [1, -1], [0, -1]]
assert all(ok for _, ok in a.verify_witnesses())
"#);
}

#[test]
fn errors_map_to_python_exceptions() {
    run(r#"
try:
    gkz.Configuration([[1, 2, 1, 1], [0, 1, 2, 3]])
    raise SystemExit("accepted a bad first row")
except ValueError as e:
    assert "invariant" in str(e)
try:
    gkz.Configuration([[1, 1, 1, 1], [0, 1, 2, 3]]).construct()
    raise SystemExit("constructed on a Cohen-Macaulay input")
except gkz.GkzError:
    pass
"#);
}
