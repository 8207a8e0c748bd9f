use typea_oracle::census::census;
use typea_oracle::TableCache;

const GROUPS: &[(usize, u64, bool)] = &[(2, 3, false), (2, 4, false), (2, 5, false), (2, 7, false), (3, 2, true)];

#[test]
fn census_reports_pass() {
    for &(n, q, tw) in GROUPS {
        let c = census(n, q, tw, &TableCache::disabled()).unwrap();
        for chk in &c.report.checks {
            println!("{} {}: {} | expected {} found {}", c.group.name, chk.passed, chk.identity, chk.expected, chk.found);
        }
        assert!(c.report.passed(), "{}", c.group.name);
    }
}
