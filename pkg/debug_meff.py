import numpy as np
from gaitforge import config, model, standing, _engine

cfg = config.default_config()
kin = model.KinematicParams.from_config(cfg.model)
nom = standing.nominal_joints(cfg.standing, kin)
st = model.RobotState(joint_positions=nom.copy())
st.base.position[2] = model.base_height_for_contact(kin, nom, 0.0)
qpos, qvel = st.pack()

(parents, axes, qoff, tloc, mass, comloc, inertia, corners,
 qlo, qhi, tqlim) = kin.packed()

M = np.empty((18, 18))
rhs = np.empty(18)
soleL = np.empty(3); soleR = np.empty(3)
com = np.empty(3); vcom = np.empty(3)
_engine.mass_and_rhs(parents, axes, qoff, tloc, mass, comloc, inertia,
                     corners, qlo, qhi, qpos, qvel, np.zeros(12), 9.81,
                     0.0, 0.0, 0.8, 0.02, 0.001,
                     0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, np.zeros((1, 1)), 1.0, 1.0,
                     np.zeros(3), np.zeros(3), 0,
                     M, rhs, soleL, soleR, com, vcom)

print("M symmetric err:", np.max(np.abs(M - M.T)))
Minv = np.linalg.inv(M)

# corner Jacobian via unit generalized velocities
R = np.empty((13, 3, 3)); o = np.empty((13, 3)); comw = np.empty((13, 3))
_engine.fk_pass(parents, axes, qoff, tloc, comloc, qpos, R, o, comw)

def corner_jac(body, corner):
    pw = o[body] + R[body] @ corners[corner]
    J = np.zeros((3, 18))
    w = np.empty((13, 3)); vo = np.empty((13, 3)); vc = np.empty((13, 3))
    axw = np.empty((13, 3))
    for i in range(18):
        qv = np.zeros(18); qv[i] = 1.0
        _engine.vel_pass(parents, axes, qv, R, o, comw, w, vo, vc, axw)
        # point velocity of corner on body
        v = vo[body] + np.cross(w[body], pw - o[body])
        J[:, i] = v
    return J

for body, name in ((6, "left"), (12, "right")):
    for k in range(4):
        J = corner_jac(body, k)
        mx = 1.0 / (J[0] @ Minv @ J[0])
        my = 1.0 / (J[1] @ Minv @ J[1])
        mz = 1.0 / (J[2] @ Minv @ J[2])
        print(f"{name} corner {k}: m_eff x={mx:.4f} y={my:.4f} z={mz:.4f}")
