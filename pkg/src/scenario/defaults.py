"""
Default parameters of the single-AP, two-user room scenario.

SI units unless the name says otherwise.
"""

# ========== ROOM ==========
ROOM_WIDTH_X = 4.0
ROOM_LENGTH_Y = 8.0
ROOM_HEIGHT_Z = 3.0
COMM_PLANE_Z = 1.0  # the 2 m drop from ceiling to this plane is the "L" of the setup
WALL_REFLECTIVITY = 0.8

# ========== ACCESS POINT ==========
AP_POSITION = (2.0, 5.0, 3.0)
AP_NORMAL = (0.0, 0.0, -1.0)
SEMI_ANGLE_DEG = 60.0
EFFICIENCY_W_PER_A = 1.0
NOMA_TOTAL_POWER_W = 1.0
# No single-colour responsivity is given for plain NOMA; red's value is assumed.
NOMA_RESPONSIVITY_A_PER_W = 0.4

# (id, optical power W, responsivity A/W)
COLOURS = (
    ("R", 0.8, 0.4),
    ("Y", 0.5, 0.35),
    ("G", 0.3, 0.3),
    ("B", 0.3, 0.2),
)

# ========== RECEIVERS ==========
RX_NORMAL = (0.0, 0.0, 1.0)
DETECTOR_AREA_M2 = 1e-4
FOV_DEG = 60.0
FILTER_GAIN = 1.0
REFRACTIVE_INDEX = 1.5
STATIONARY_USER_POSITION = (1.0, 2.0, 1.0)
MOBILE_USER_START = (2.0, 2.0, 1.0)

# ========== NOISE ==========
NOISE_DENSITY_A2_PER_HZ = 1e-15
# Not calibrated: with the density above, no bandwidth reaches Gbps rates.
BANDWIDTH_HZ = 1e8
DARK_CURRENT_A = 0.0
BACKGROUND_POWER_W = 0.0

# ========== SWEEP ==========
SWEEP_AXIS = "y"
SWEEP_START_M = 2.0
SWEEP_STOP_M = 8.0
SWEEP_STEP_M = 0.25
GRID_TOLERANCE_M = 1e-9

# ========== CALIBRATION ==========
CALIBRATION_BRACKET_HZ = (1e6, 1e10)
CALIBRATION_MAX_FACTOR = 10.0
