//! Text formats: graph6/digraph6 (bit-exact per the published format
//! definition: 6-bit groups, offset 63), an edge-list format for hand
//! authoring, and DOT output.
//!
//! graph6 encodes the upper triangle of the adjacency matrix column by
//! column ((0,1),(0,2),(1,2),(0,3),...); digraph6 is `&` followed by the
//! full adjacency matrix row by row. Both pad with zero bits to a multiple
//! of six and add 63 to each group.

use compgraph::partition::VertexPartition;
use compgraph::{Digraph, Graph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn parse_err(offset: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { offset, message: message.into() }
}

/// Either kind of parsed input.
#[derive(Debug, Clone)]
pub enum GraphInput {
    Undirected(Graph),
    Directed(Digraph),
}

/// Detects and parses one of the supported formats: digraph6 (`&`-prefixed),
/// graph6, or edge-list text (leading `n m` header line).
pub fn parse_input(text: &str) -> Result<GraphInput, FormatError> {
    let trimmed = text.trim_start_matches(['\u{feff}']);
    let first_line = trimmed.lines().next().unwrap_or("");
    let looks_like_edge_list = {
        let mut it = first_line.split_whitespace();
        matches!(
            (it.next().map(|t| t.parse::<usize>()), it.next().map(|t| t.parse::<usize>()), it.next()),
            (Some(Ok(_)), Some(Ok(_)), None)
        )
    };
    if looks_like_edge_list {
        parse_edge_list(trimmed)
    } else {
        let line = first_line.trim();
        let stripped = line.strip_prefix(">>digraph6<<").unwrap_or(line);
        if stripped.starts_with('&') || line.starts_with(">>digraph6<<") {
            Ok(GraphInput::Directed(parse_digraph6(line)?))
        } else {
            Ok(GraphInput::Undirected(parse_graph6(line)?))
        }
    }
}

// --- graph6 / digraph6 -----------------------------------------------------

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // three 6-bit groups, big-endian
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
}

fn encode_bits(bits: impl Iterator<Item = bool>, out: &mut Vec<u8>) {
    let mut group = 0u8;
    let mut used = 0u8;
    for bit in bits {
        group = (group << 1) | bit as u8;
        used += 1;
        if used == 6 {
            out.push(63 + group);
            group = 0;
            used = 0;
        }
    }
    if used > 0 {
        out.push(63 + (group << (6 - used)));
    }
}

/// graph6 line for an undirected graph.
pub fn graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    encode_bits(
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j)),
        &mut out,
    );
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// digraph6 line for a digraph.
pub fn digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut out = vec![b'&'];
    encode_order(n, &mut out);
    encode_bits(
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| d.has_arc(i, j)),
        &mut out,
    );
    String::from_utf8(out).expect("digraph6 bytes are ASCII")
}

struct ByteReader<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> ByteReader<'a> {
    fn next(&mut self) -> Result<u8, FormatError> {
        let b = *self
            .bytes
            .get(self.pos)
            .ok_or_else(|| parse_err(self.base + self.pos, "unexpected end of line"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                self.base + self.pos,
                format!("byte 0x{b:02x} outside the printable range 63..=126"),
            ));
        }
        self.pos += 1;
        Ok(b)
    }

    fn read_order(&mut self) -> Result<usize, FormatError> {
        let b = self.next()?;
        if b != b'~' {
            return Ok((b - 63) as usize);
        }
        let mut n = 0usize;
        for _ in 0..3 {
            let b = self.next()?;
            if b == b'~' {
                return Err(parse_err(self.base + self.pos - 1, "order beyond 258047 unsupported"));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        Ok(n)
    }

    fn read_bits(&mut self, count: usize) -> Result<Vec<bool>, FormatError> {
        let mut bits = Vec::with_capacity(count + 5);
        while bits.len() < count {
            let b = self.next()? - 63;
            for k in (0..6).rev() {
                bits.push(b >> k & 1 == 1);
            }
        }
        if bits[count..].iter().any(|&b| b) {
            return Err(parse_err(self.base + self.pos - 1, "nonzero padding bits"));
        }
        bits.truncate(count);
        Ok(bits)
    }

    fn expect_end(&self) -> Result<(), FormatError> {
        if self.pos != self.bytes.len() {
            return Err(parse_err(self.base + self.pos, "trailing bytes after graph data"));
        }
        Ok(())
    }
}

fn check_order(n: usize, offset: usize) -> Result<(), FormatError> {
    if n == 0 || n > compgraph::MAX_VERTICES {
        return Err(parse_err(offset, format!("order {n} outside the supported range 1..=64")));
    }
    Ok(())
}

/// Parses a graph6 line (optionally with the `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim();
    let (body, base) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, ">>graph6<<".len()),
        None => (line, 0),
    };
    let mut r = ByteReader { bytes: body.as_bytes(), pos: 0, base };
    let n = r.read_order()?;
    check_order(n, base)?;
    let bits = r.read_bits(n * (n - 1) / 2)?;
    r.expect_end()?;
    let mut g = Graph::empty(n).expect("order checked");
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Parses a digraph6 line (optionally with the `>>digraph6<<` header).
pub fn parse_digraph6(line: &str) -> Result<Digraph, FormatError> {
    let line = line.trim();
    let (body, base) = match line.strip_prefix(">>digraph6<<") {
        Some(rest) => (rest, ">>digraph6<<".len()),
        None => (line, 0),
    };
    let body = body
        .strip_prefix('&')
        .ok_or_else(|| parse_err(base, "digraph6 data must start with '&'"))?;
    let mut r = ByteReader { bytes: body.as_bytes(), pos: 0, base: base + 1 };
    let n = r.read_order()?;
    check_order(n, base + 1)?;
    let bits = r.read_bits(n * n)?;
    r.expect_end()?;
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return Err(parse_err(base + 1, format!("loop at vertex {i}")));
                }
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs(n, &arcs).map_err(|e| FormatError::Invalid(e.to_string()))
}

// --- edge list ---------------------------------------------------------------

/// Parses edge-list text: a `n m` header line, then `m` lines of `u v`
/// (undirected) or `u -> v` (directed), 0-based.
pub fn parse_edge_list(text: &str) -> Result<GraphInput, FormatError> {
    let mut offset = 0usize;
    let mut lines = Vec::new(); // (offset, content)
    for line in text.split_inclusive('\n') {
        let content = line.trim_end_matches(['\n', '\r']);
        let trimmed = content.trim();
        if !trimmed.is_empty() {
            lines.push((offset + (content.len() - content.trim_start().len()), trimmed));
        }
        offset += line.len();
    }
    let Some(&(header_off, header)) = lines.first() else {
        return Err(parse_err(0, "empty input"));
    };
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_off, "expected header `n <edge count>`"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_off, "expected header `n <edge count>`"))?;
    if it.next().is_some() {
        return Err(parse_err(header_off, "header has trailing tokens"));
    }
    check_order(n, header_off)?;
    let body = &lines[1..];
    if body.len() != m {
        return Err(parse_err(
            header_off,
            format!("header promises {m} edges, found {} lines", body.len()),
        ));
    }
    let directed = body.iter().any(|(_, l)| l.contains("->"));
    let mut pairs = Vec::with_capacity(m);
    for &(off, line) in body {
        let (u_str, v_str) = if directed {
            let mut parts = line.splitn(2, "->");
            let u = parts.next().unwrap_or("").trim();
            let v = parts
                .next()
                .ok_or_else(|| parse_err(off, "directed input mixes `u v` and `u -> v` lines"))?
                .trim();
            (u, v)
        } else {
            let mut it = line.split_whitespace();
            let u = it.next().unwrap_or("");
            let v = it.next().ok_or_else(|| parse_err(off, "expected `u v`"))?;
            if it.next().is_some() {
                return Err(parse_err(off, "edge line has trailing tokens"));
            }
            (u, v)
        };
        let u: usize =
            u_str.parse().map_err(|_| parse_err(off, format!("bad vertex `{u_str}`")))?;
        let v: usize =
            v_str.parse().map_err(|_| parse_err(off, format!("bad vertex `{v_str}`")))?;
        if u >= n || v >= n {
            return Err(parse_err(off, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(off, format!("loop at vertex {u}")));
        }
        pairs.push((u, v));
    }
    if directed {
        Digraph::from_arcs(n, &pairs)
            .map(GraphInput::Directed)
            .map_err(|e| FormatError::Invalid(e.to_string()))
    } else {
        Graph::from_edges(n, &pairs)
            .map(GraphInput::Undirected)
            .map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

pub fn edge_list_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn edge_list_digraph(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.order(), d.arc_count());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} -> {v}\n"));
    }
    out
}

// --- DOT ---------------------------------------------------------------------

/// DOT for an undirected graph.
pub fn dot_graph(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  v{v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT for a digraph; with a partition, partite sets become same-rank
/// clusters.
pub fn dot_digraph(d: &Digraph, partition: Option<&VertexPartition>) -> String {
    let mut out = String::from("digraph d {\n");
    match partition {
        Some(p) => {
            for i in 0..p.shape().part_count() {
                out.push_str(&format!("  subgraph cluster_part{i} {{\n    rank = same;\n"));
                for v in compgraph::bits::iter_bits(p.part_members(i)) {
                    out.push_str(&format!("    v{v};\n"));
                }
                out.push_str("  }\n");
            }
        }
        None => {
            for v in 0..d.order() {
                out.push_str(&format!("  v{v};\n"));
            }
        }
    }
    for (u, v) in d.arcs() {
        out.push_str(&format!("  v{u} -> v{v};\n"));
    }
    out.push_str("}\n");
    out
}
