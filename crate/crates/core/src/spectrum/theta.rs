use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

/// Non-commutativity vector `θ⃗` in Bohr radii squared.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ThetaVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ThetaVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn along_z(theta_z: f64) -> Self {
        Self { x: 0.0, y: 0.0, z: theta_z }
    }

    pub fn magnitude(&self) -> f64 {
        self.as_vector().norm()
    }

    /// Unit direction `n̂`, undefined for the zero vector.
    pub fn axis(&self) -> Option<Vector3<f64>> {
        let m = self.magnitude();
        (m > 0.0).then(|| self.as_vector() / m)
    }

    pub fn as_vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn rotated(&self, rotation: &Matrix3<f64>) -> Self {
        let v = rotation * self.as_vector();
        Self::new(v.x, v.y, v.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alignment {
    /// `|θ⃗|`, the component along the new `z` axis.
    pub theta_z: f64,
    /// Proper rotation taking `n̂` to `ẑ`.
    pub rotation: Matrix3<f64>,
}

/// Rotates the frame so that `θ⃗` points along `+z`.
pub fn align_theta(theta: &ThetaVector) -> Alignment {
    let Some(axis) = theta.axis() else {
        return Alignment { theta_z: 0.0, rotation: Matrix3::identity() };
    };
    let z = Vector3::z();
    let v = axis.cross(&z);
    let s2 = v.norm_squared();
    let c = axis.dot(&z);
    let rotation = if s2 < 1e-30 {
        if c > 0.0 {
            Matrix3::identity()
        } else {
            // half turn about x
            Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0))
        }
    } else {
        let k = v.cross_matrix();
        Matrix3::identity() + k + k * k * ((1.0 - c) / s2)
    };
    Alignment { theta_z: theta.magnitude(), rotation }
}
