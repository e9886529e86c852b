import numpy as np
from gaitforge import config, model, standing, _engine

cfg = config.default_config()
kin = model.KinematicParams.from_config(cfg.model)
nom = standing.nominal_joints(cfg.standing, kin)
st = model.RobotState(joint_positions=nom.copy())
st.base.position[2] = model.base_height_for_contact(kin, nom, -0.002)
qpos, qvel = st.pack()

(parents, axes, qoff, tloc, mass, comloc, inertia, corners,
 tqlim, qlo, qhi) = kin.packed()
M = np.empty((18, 18)); rhs = np.empty(18)
soleL = np.empty(3); soleR = np.empty(3); com = np.empty(3); vcom = np.empty(3)
gh = np.zeros((2, 2))

# gravity off, zero velocity: rhs is contact only (plus joint stops if any)
_engine.mass_and_rhs(parents, axes, qoff, tloc, mass, comloc, inertia,
                     corners, qlo, qhi, qpos, qvel, np.zeros(12), 0.0, 0.0005,
                     5e4, 5e3, 0.8, 0.02, 0.001,
                     0, 0.0, 0.0, 0.0, -1.0, -1.0, 1.0, gh, 1.0, 1.0,
                     np.zeros(3), np.zeros(3), 0,
                     M, rhs, soleL, soleR, com, vcom)
np.set_printoptions(precision=8, suppress=True)
print("base rows:", rhs[:6])
print("left rows :", rhs[6:12])
print("right rows:", rhs[12:18])

# expected: numeric J^T f with fn = k*pen per corner
R = np.empty((13, 3, 3)); o = np.empty((13, 3)); comw = np.empty((13, 3))
_engine.fk_pass(parents, axes, qoff, tloc, comloc, qpos, R, o, comw)
w = np.empty((13, 3)); vo = np.empty((13, 3)); vc = np.empty((13, 3)); axw = np.empty((13, 3))

def point_jac(body):
    Js = []
    for k in range(4):
        pw = o[body] + R[body] @ corners[k]
        J = np.zeros((3, 18))
        for i in range(18):
            qv = np.zeros(18); qv[i] = 1.0
            _engine.vel_pass(parents, axes, qv, R, o, comw, w, vo, vc, axw)
            J[:, i] = vo[body] + np.cross(w[body], pw - o[body])
        Js.append((pw, J))
    return Js

rhs_ref = np.zeros(18)
for body in (6, 12):
    for pw, J in point_jac(body):
        pen = -pw[2]
        if pen <= 0:
            continue
        fn = 5e4 * pen
        rhs_ref += J.T @ np.array([0.0, 0.0, fn])
print("\nref base :", rhs_ref[:6])
print("ref left :", rhs_ref[6:12])
print("ref right:", rhs_ref[12:18])
print("\nmax |rhs - ref|:", np.max(np.abs(rhs - rhs_ref)))
print("diff:", rhs - rhs_ref)
