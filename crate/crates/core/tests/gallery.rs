use semihopf::structures::check_structure;
use semihopf::Example;

#[test]
fn gallery_verdicts() {
    let mut bad = Vec::new();
    for (ex, s) in Example::gallery() {
        let desc = semihopf::example(&ex, &s).unwrap();
        let r = check_structure(&desc, 3).unwrap();
        eprintln!("{} over {}: {}", ex.name(), s, if r.passed() { "pass" } else { "fail" });
        if r.passed() == ex.is_negative() {
            bad.push(format!("{} over {s}\n{r}", ex.name()));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
