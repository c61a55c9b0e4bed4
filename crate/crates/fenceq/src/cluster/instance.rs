use serde::{Deserialize, Serialize};

use crate::surface::{Arc, MultiLamination, PolygonTriangulation, SurfaceError, TriangulationJson};

/// A triangulated polygon with laminations and a target arc, as read and
/// written in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcInstance {
    pub triangulation: TriangulationJson,
    #[serde(default)]
    pub laminations: MultiLamination,
    pub arc: Arc,
}

impl ArcInstance {
    pub fn new(t: &PolygonTriangulation, laminations: MultiLamination, arc: Arc) -> Self {
        ArcInstance {
            triangulation: t.to_json(),
            laminations,
            arc,
        }
    }

    /// Validated triangulation; also checks that the arc is a diagonal of the polygon.
    pub fn triangulation(&self) -> Result<PolygonTriangulation, SurfaceError> {
        let t = PolygonTriangulation::from_json(&self.triangulation)?;
        if !self.arc.is_arc_of(t.n()) {
            return Err(SurfaceError::InvalidArc {
                a: self.arc.a(),
                b: self.arc.b(),
                n: t.n(),
            });
        }
        Ok(t)
    }
}
