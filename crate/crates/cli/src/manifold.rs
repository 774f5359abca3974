use skein_core::diagram::Orientation;
use skein_core::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Manifold {
    Disc,
    Annulus,
    Sphere,
    Surface {
        genus: usize,
        circles: usize,
        labels: Option<String>,
    },
    Interval(String, String),
}

impl Manifold {
    pub fn parse(s: &str) -> Result<Manifold> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("cannot parse manifold '{s}'"));
        match s {
            "disc" | "disk" => return Ok(Manifold::Disc),
            "annulus" => return Ok(Manifold::Annulus),
            "sphere" => return Ok(Manifold::Sphere),
            _ => {}
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        match head.trim() {
            "surface" => {
                let mut parts = args.splitn(3, ',');
                let mut number = || {
                    parts
                        .next()
                        .and_then(|p| p.trim().parse::<usize>().ok())
                        .ok_or_else(bad)
                };
                let (genus, circles) = (number()?, number()?);
                let labels = parts
                    .next()
                    .map(|l| l.trim().to_string())
                    .filter(|l| !l.is_empty());
                Ok(Manifold::Surface {
                    genus,
                    circles,
                    labels,
                })
            }
            "interval" => {
                let (v, w) = args.split_once(',').ok_or_else(bad)?;
                Ok(Manifold::Interval(
                    v.trim().to_string(),
                    w.trim().to_string(),
                ))
            }
            _ => Err(bad()),
        }
    }

    /// Genus and number of boundary circles of a surface.
    pub fn topology(&self) -> Option<(usize, usize)> {
        match self {
            Manifold::Disc => Some((0, 1)),
            Manifold::Annulus => Some((0, 2)),
            Manifold::Sphere => Some((0, 0)),
            Manifold::Surface { genus, circles, .. } => Some((*genus, *circles)),
            Manifold::Interval(..) => None,
        }
    }
}

/// Boundary labels: circles separated by `;`, points by `,` or whitespace,
/// each point `X`, `X+` (outgoing) or `X-` (incoming).
pub fn parse_labels(s: &str) -> Vec<Vec<(String, Orientation)>> {
    s.split(';')
        .map(|circle| {
            circle
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| match p.strip_suffix('-') {
                    Some(name) => (name.to_string(), Orientation::Down),
                    None => (
                        p.strip_suffix('+').unwrap_or(p).to_string(),
                        Orientation::Up,
                    ),
                })
                .collect()
        })
        .collect()
}
