use super::MealyAutomaton;

/// Graphviz export. Nodes are `e` followed by the states in declaration
/// order; parallel transitions share one edge whose label lists `in|out`
/// pairs. Edges are ordered by source state, then least input letter.
pub fn to_dot(a: &MealyAutomaton) -> String {
    let m = a.alphabet_size();
    let name = |t: Option<usize>| t.map_or("e", |t| a.states()[t].name.as_str());
    let mut s = String::from("digraph {\n");
    s.push_str("  \"e\";\n");
    for q in a.states() {
        s.push_str(&format!("  \"{}\";\n", q.name));
    }
    let mut emit_edges = |src: &str, out: &dyn Fn(usize) -> usize, next: &dyn Fn(usize) -> Option<usize>| {
        let mut groups: Vec<(Option<usize>, Vec<String>)> = Vec::new();
        for y in 0..m {
            let t = next(y);
            let label = format!("{y}|{}", out(y));
            match groups.iter_mut().find(|(g, _)| *g == t) {
                Some((_, labels)) => labels.push(label),
                None => groups.push((t, vec![label])),
            }
        }
        for (t, labels) in groups {
            s.push_str(&format!(
                "  \"{src}\" -> \"{}\" [label=\"{}\"];\n",
                name(t),
                labels.join(", ")
            ));
        }
    };
    emit_edges("e", &|y| y, &|_| None);
    for q in a.states() {
        emit_edges(&q.name, &|y| q.output.image(y), &|y| q.next[y]);
    }
    s.push_str("}\n");
    s
}
