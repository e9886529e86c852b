import numpy as np
from gaitforge import config, model, standing, _engine

cfg = config.default_config()
kin = model.KinematicParams.from_config(cfg.model)
nom = standing.nominal_joints(cfg.standing, kin)
st = model.RobotState(joint_positions=nom.copy())
st.base.position[2] = model.base_height_for_contact(kin, nom, -0.002)  # pressed in
qpos, qvel = st.pack()

(parents, axes, qoff, tloc, mass, comloc, inertia, corners,
 tqlim, qlo, qhi) = kin.packed()
M = np.empty((18, 18)); rhs = np.empty(18)
soleL = np.empty(3); soleR = np.empty(3); com = np.empty(3); vcom = np.empty(3)
gh = np.zeros((2, 2))

def accel(qpos, qvel, tau):
    _engine.mass_and_rhs(parents, axes, qoff, tloc, mass, comloc, inertia,
                         corners, qlo, qhi, qpos, qvel, tau, 9.81, 0.0005,
                         cfg.simulator.contact_stiffness, cfg.simulator.contact_damping,
                         cfg.simulator.friction, cfg.simulator.slip_velocity,
                         cfg.simulator.damping_ramp,
                         0, 0.0, 0.0, 0.0, -1.0, -1.0, 1.0, gh, 1.0, 1.0,
                         np.zeros(3), np.zeros(3), 0,
                         M, rhs, soleL, soleR, com, vcom)
    return np.linalg.solve(M, rhs)

ud = accel(qpos, qvel, np.zeros(12))
np.set_printoptions(precision=10, suppress=True)
print("base accel:", ud[:6])
print("left joints :", ud[6:12])
print("right joints:", ud[12:18])
print("lateral symmetry (y, roll, yaw should be 0):", ud[1], ud[3], ud[5])
# mirrored joints differ in sign for roll/yaw, same for pitch/knee/fpitch, sign for froll
sgn = np.array([-1, -1, 1, 1, 1, -1])
print("mirror err:", np.max(np.abs(ud[6:12] - sgn * ud[12:18])))

# sole corner forces symmetric? inspect rhs contact contribution alone
tau0 = np.zeros(12)
print("\nM symmetry:", np.max(np.abs(M - M.T)))
print("soleL:", soleL, "soleR:", soleR)

# check M itself mirrors: swap legs and flip signs
P = np.arange(18)
P[6:12], P[12:18] = np.arange(12, 18), np.arange(6, 12)
S = np.ones(18); S[1] = -1; S[3] = -1; S[5] = -1
S[6:12] = sgn; S[12:18] = sgn
Mm = (S[:, None] * S[None, :]) * M[np.ix_(P, P)]
print("M mirror err:", np.max(np.abs(Mm - M)))
rm = S * rhs[P]
print("rhs mirror err:", np.max(np.abs(rm - rhs)), "rhs:", rhs[:6])
