//! A small expression grammar for composing graph families and operations,
//! e.g. `join(K1, cycle(5))`, `power(gear(4), 2)`, `complete:5`.
//!
//! Families: path(n), cycle(n), complete(n), complete_bipartite(m,n),
//! wheel(n), double_wheel(n), m_wheel(m,n), fan(n), gear(n),
//! complete_sun(n) / sun(n), complete_split(r,s) / split(r,s),
//! windmill(n,k), random(n,p,seed), and the aliases K5 / C7 / P4.
//! Operations: union, disjoint_union, join, cartesian, corona, complement,
//! power(g,r), subdivision, super_subdivision(g,m), line, total.
//! `family:a:b` is shorthand for `family(a,b)`.

use thiserror::Error;

use crate::graph::{generate, FamilySpec, Graph, GraphError};
use crate::ops::{self, OpResult};

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("parse error at byte {0}: {1}")]
    Parse(usize, String),
    #[error("unknown family or operation {0:?}")]
    UnknownName(String),
    #[error("{name} expects {expected}, got {got} arguments")]
    Arity {
        name: String,
        expected: &'static str,
        got: usize,
    },
    #[error("argument of {0} must be a {1}")]
    BadArgument(String, &'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("operation error: {0}")]
    Op(#[from] ops::OpError),
}

/// Result of evaluating an expression; the provenance is kept when the
/// top-level node is an operation.
pub struct EvalResult {
    pub graph: Graph,
    pub op: Option<OpResult>,
}

pub fn eval(input: &str) -> Result<EvalResult, ExprError> {
    let mut parser = Parser {
        text: input.as_bytes(),
        pos: 0,
    };
    let node = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos != parser.text.len() {
        return Err(ExprError::Parse(parser.pos, "trailing input".into()));
    }
    eval_node(&node)
}

/// Evaluates an expression to a plain graph.
pub fn eval_graph(input: &str) -> Result<Graph, ExprError> {
    Ok(eval(input)?.graph)
}

#[derive(Debug)]
enum Node {
    Call(String, Vec<Arg>),
}

#[derive(Debug)]
enum Arg {
    Expr(Node),
    Int(u64),
    Float(f64),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn parse_expr(&mut self) -> Result<Node, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ExprError::Parse(start, "expected a name".into()));
        }
        let name = std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .to_string();
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let mut args = Vec::new();
                loop {
                    self.skip_ws();
                    if self.peek() == Some(b')') && args.is_empty() {
                        self.pos += 1;
                        break;
                    }
                    args.push(self.parse_arg()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(ExprError::Parse(self.pos, "expected , or )".into())),
                    }
                }
                Ok(Node::Call(name, args))
            }
            Some(b':') => {
                let mut args = Vec::new();
                while self.peek() == Some(b':') {
                    self.pos += 1;
                    args.push(Arg::Int(self.parse_int()?));
                }
                Ok(Node::Call(name, args))
            }
            _ => Ok(Node::Call(name, Vec::new())),
        }
    }

    fn parse_arg(&mut self) -> Result<Arg, ExprError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let int = self.parse_int()?;
                if self.peek() == Some(b'.') {
                    self.pos += 1;
                    let frac_start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let text = format!(
                        "{int}.{}",
                        std::str::from_utf8(&self.text[frac_start..self.pos]).unwrap()
                    );
                    let value: f64 = text
                        .parse()
                        .map_err(|_| ExprError::Parse(frac_start, "bad number".into()))?;
                    Ok(Arg::Float(value))
                } else {
                    Ok(Arg::Int(int))
                }
            }
            _ => Ok(Arg::Expr(self.parse_expr()?)),
        }
    }

    fn parse_int(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ExprError::Parse(start, "expected an integer".into()));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ExprError::Parse(start, "integer out of range".into()))
    }
}

fn want_ints(name: &str, args: &[Arg], n: usize) -> Result<Vec<usize>, ExprError> {
    if args.len() != n {
        return Err(ExprError::Arity {
            name: name.to_string(),
            expected: match n {
                1 => "1 integer",
                2 => "2 integers",
                _ => "integers",
            },
            got: args.len(),
        });
    }
    args.iter()
        .map(|a| match a {
            Arg::Int(i) => Ok(*i as usize),
            _ => Err(ExprError::BadArgument(name.to_string(), "integer")),
        })
        .collect()
}

fn want_graphs(name: &str, args: &[Arg], n: usize) -> Result<Vec<Graph>, ExprError> {
    if args.len() != n {
        return Err(ExprError::Arity {
            name: name.to_string(),
            expected: if n == 1 { "1 graph" } else { "2 graphs" },
            got: args.len(),
        });
    }
    args.iter()
        .map(|a| match a {
            Arg::Expr(node) => Ok(eval_node(node)?.graph),
            _ => Err(ExprError::BadArgument(name.to_string(), "graph expression")),
        })
        .collect()
}

fn family(spec: FamilySpec) -> Result<EvalResult, ExprError> {
    Ok(EvalResult {
        graph: generate(spec)?,
        op: None,
    })
}

fn from_op(op: OpResult) -> EvalResult {
    EvalResult {
        graph: op.graph.clone(),
        op: Some(op),
    }
}

fn eval_node(node: &Node) -> Result<EvalResult, ExprError> {
    let Node::Call(name, args) = node;
    // K5 / C7 / P4 shorthand
    if args.is_empty() && name.len() >= 2 {
        let (head, tail) = name.split_at(1);
        if let Ok(n) = tail.parse::<usize>() {
            match head {
                "K" | "k" => return family(FamilySpec::Complete { n }),
                "C" | "c" => return family(FamilySpec::Cycle { n }),
                "P" | "p" => return family(FamilySpec::Path { n }),
                _ => {}
            }
        }
    }
    match name.as_str() {
        "path" => family(FamilySpec::Path {
            n: want_ints(name, args, 1)?[0],
        }),
        "cycle" => family(FamilySpec::Cycle {
            n: want_ints(name, args, 1)?[0],
        }),
        "complete" => family(FamilySpec::Complete {
            n: want_ints(name, args, 1)?[0],
        }),
        "complete_bipartite" => {
            let p = want_ints(name, args, 2)?;
            family(FamilySpec::CompleteBipartite { m: p[0], n: p[1] })
        }
        "wheel" => family(FamilySpec::Wheel {
            rim: want_ints(name, args, 1)?[0],
        }),
        "double_wheel" => family(FamilySpec::DoubleWheel {
            rim: want_ints(name, args, 1)?[0],
        }),
        "m_wheel" => {
            let p = want_ints(name, args, 2)?;
            family(FamilySpec::MWheel {
                cycles: p[0],
                rim: p[1],
            })
        }
        "fan" => family(FamilySpec::Fan {
            rim: want_ints(name, args, 1)?[0],
        }),
        "gear" => family(FamilySpec::Gear {
            n: want_ints(name, args, 1)?[0],
        }),
        "complete_sun" | "sun" => family(FamilySpec::CompleteSun {
            n: want_ints(name, args, 1)?[0],
        }),
        "complete_split" | "split" => {
            let p = want_ints(name, args, 2)?;
            family(FamilySpec::CompleteSplit {
                clique: p[0],
                independent: p[1],
            })
        }
        "windmill" => {
            let p = want_ints(name, args, 2)?;
            family(FamilySpec::Windmill {
                blade: p[0],
                copies: p[1],
            })
        }
        "random" => {
            if args.len() != 3 {
                return Err(ExprError::Arity {
                    name: name.clone(),
                    expected: "random(n, p, seed)",
                    got: args.len(),
                });
            }
            let n = match args[0] {
                Arg::Int(i) => i as usize,
                _ => return Err(ExprError::BadArgument(name.clone(), "integer order")),
            };
            let p = match args[1] {
                Arg::Float(p) => p,
                Arg::Int(i) => i as f64,
                _ => return Err(ExprError::BadArgument(name.clone(), "edge probability")),
            };
            let seed = match args[2] {
                Arg::Int(s) => s,
                _ => return Err(ExprError::BadArgument(name.clone(), "integer seed")),
            };
            if !(0.0..=1.0).contains(&p) {
                return Err(ExprError::BadArgument(name.clone(), "probability in [0,1]"));
            }
            Ok(EvalResult {
                graph: Graph::random(n, p, seed),
                op: None,
            })
        }
        "union" => {
            let g = want_graphs(name, args, 2)?;
            Ok(from_op(ops::union(&g[0], &g[1])))
        }
        "disjoint_union" => {
            let g = want_graphs(name, args, 2)?;
            Ok(from_op(ops::disjoint_union(&g[0], &g[1])))
        }
        "join" => {
            let g = want_graphs(name, args, 2)?;
            Ok(from_op(ops::join(&g[0], &g[1])))
        }
        "cartesian" => {
            let g = want_graphs(name, args, 2)?;
            Ok(from_op(ops::cartesian_product(&g[0], &g[1])))
        }
        "corona" => {
            let g = want_graphs(name, args, 2)?;
            Ok(from_op(ops::corona(&g[0], &g[1])))
        }
        "complement" => {
            let g = want_graphs(name, args, 1)?;
            Ok(from_op(ops::complement(&g[0])))
        }
        "line" => {
            let g = want_graphs(name, args, 1)?;
            Ok(from_op(ops::line_graph(&g[0])))
        }
        "total" => {
            let g = want_graphs(name, args, 1)?;
            Ok(from_op(ops::total_graph(&g[0])))
        }
        "subdivision" => {
            let g = want_graphs(name, args, 1)?;
            Ok(from_op(ops::complete_subdivision(&g[0])))
        }
        "power" | "super_subdivision" => {
            if args.len() != 2 {
                return Err(ExprError::Arity {
                    name: name.clone(),
                    expected: "a graph and an integer",
                    got: args.len(),
                });
            }
            let g = match &args[0] {
                Arg::Expr(node) => eval_node(node)?.graph,
                _ => return Err(ExprError::BadArgument(name.clone(), "graph expression")),
            };
            let r = match args[1] {
                Arg::Int(i) => i as usize,
                _ => return Err(ExprError::BadArgument(name.clone(), "integer")),
            };
            let op = if name == "power" {
                ops::power(&g, r)?
            } else {
                ops::super_subdivision(&g, r)?
            };
            Ok(from_op(op))
        }
        _ => Err(ExprError::UnknownName(name.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_and_shorthand() {
        assert_eq!(eval_graph("complete(5)").unwrap().size(), 10);
        assert_eq!(eval_graph("complete:5").unwrap().size(), 10);
        assert_eq!(eval_graph("K5").unwrap().size(), 10);
        assert_eq!(eval_graph("C7").unwrap().order(), 7);
        assert_eq!(eval_graph("gear:4").unwrap().order(), 9);
        assert_eq!(eval_graph("complete_bipartite:2:3").unwrap().size(), 6);
        assert_eq!(eval_graph("split(3, 2)").unwrap().order(), 5);
    }

    #[test]
    fn composed_expressions() {
        let wheel = eval_graph("join(K1, cycle(5))").unwrap();
        assert_eq!(wheel.order(), 6);
        assert_eq!(wheel.size(), 10);

        let g = eval_graph("power(gear(4), 2)").unwrap();
        assert_eq!(g.order(), 9);

        let c = eval_graph("corona(P2, P2)").unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.size(), 7);

        let comp = eval_graph("complement(complement(C5))").unwrap();
        assert_eq!(comp.size(), 5);
    }

    #[test]
    fn random_is_seeded() {
        let a = eval_graph("random(10, 0.5, 7)").unwrap();
        let b = eval_graph("random(10, 0.5, 7)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn top_level_op_keeps_provenance() {
        let r = eval("line(P4)").unwrap();
        assert!(r.op.is_some());
        let r = eval("cycle(5)").unwrap();
        assert!(r.op.is_none());
    }

    #[test]
    fn errors() {
        assert!(matches!(eval_graph("frobnicate(3)"), Err(ExprError::UnknownName(_))));
        assert!(eval_graph("cycle(2)").is_err());
        assert!(eval_graph("cycle(3) extra").is_err());
        assert!(eval_graph("power(C5)").is_err());
        assert!(eval_graph("random(5, 1.5, 2)").is_err());
    }
}
