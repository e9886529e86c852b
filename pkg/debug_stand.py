import numpy as np
from gaitforge import config, model, standing, simulator

cfg = config.default_config()
kin = model.KinematicParams.from_config(cfg.model)
nom = standing.nominal_joints(cfg.standing, kin)
st = model.RobotState(joint_positions=nom.copy())
st.base.position[2] = model.base_height_for_contact(kin, nom, 0.001)
terr = simulator.TerrainProfile.flat()

dt = cfg.simulator.dynamics_dt
n = int(3.0 / dt)
tq = np.zeros(12)
for i in range(n):
    if i % 2 == 0:
        tq, airborne = standing.standing_control(kin, st, cfg.standing)
    st = simulator.step_dynamics(kin, st, tq, cfg.simulator, terr)
    if i % 200 == 0 or i == n - 1:
        com = model.center_of_mass(kin, st)
        ctr = standing.polygon_center(kin, st)
        print(f"t={i*dt:5.3f} z={st.base.position[2]:+.4f} "
              f"rpy=({st.base.rpy[0]:+.3f},{st.base.rpy[1]:+.3f},{st.base.rpy[2]:+.3f}) "
              f"ex={com[0]-ctr[0]:+.4f} ey={com[1]-ctr[1]:+.4f} "
              f"|qd|={np.max(np.abs(st.joint_velocities)):.3f} "
              f"vb=({st.base.velocity[0]:+.3f},{st.base.velocity[1]:+.3f},{st.base.velocity[2]:+.3f}) "
              f"tq_ankle=({tq[4]:+.1f},{tq[5]:+.1f},{tq[10]:+.1f},{tq[11]:+.1f})")
    if abs(st.base.rpy[0]) > 1.0 or abs(st.base.rpy[1]) > 1.0:
        print("tipped at t=", i * dt)
        break
