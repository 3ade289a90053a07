import os

from dotenv import load_dotenv

load_dotenv()

# logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

# numerics
OCCUPATION_OVERFLOW_EXPONENT = float(os.getenv("OCCUPATION_OVERFLOW_EXPONENT", "700"))
NORMALIZATION_TOLERANCE = float(os.getenv("NORMALIZATION_TOLERANCE", "1e-12"))
DISCORD_ROUNDING_FLOOR = float(os.getenv("DISCORD_ROUNDING_FLOOR", "1e-12"))

# discord measurement-grid oracle
DISCORD_GRID_SIZE = int(os.getenv("DISCORD_GRID_SIZE", "200"))
DISCORD_GRID_TOLERANCE = float(os.getenv("DISCORD_GRID_TOLERANCE", "1e-3"))

# experiments
SWEEP_WORKERS = int(os.getenv("SWEEP_WORKERS", "1"))
SUDDEN_DEATH_SCAN_POINTS = int(os.getenv("SUDDEN_DEATH_SCAN_POINTS", "64"))
SUDDEN_DEATH_T_MIN = float(os.getenv("SUDDEN_DEATH_T_MIN", "0.02"))
SUDDEN_DEATH_T_MAX_FACTOR = float(os.getenv("SUDDEN_DEATH_T_MAX_FACTOR", "10"))
SUDDEN_DEATH_XTOL = float(os.getenv("SUDDEN_DEATH_XTOL", "1e-9"))

# physical defaults for the command line (flags only, never read from env)
DEFAULT_EPSILON = 0.2
DEFAULT_KAPPA = 1.0
DEFAULT_GAMMA = 1.0
