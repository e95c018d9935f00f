from flask import Flask


# Setup of key Flask object (app)
app = Flask(__name__)

# Defaults for every computation; the command line overrides them per invocation.
# Nothing is read from the environment so that a command line fully determines its output.
app.config.from_mapping(
    # JSON envelope version written by every command
    FORMAT_VERSION=1,
    # significant digits for float columns, mirrors the published moment table
    FLOAT_DIGITS=4,
    # Monte Carlo work is split into chunks of this many samples, each with its own RNG substream
    MC_CHUNK_SIZE=65536,
    MC_THREADS=1,
    MC_SEED=20240101,
    MC_BINS=50,
    # caps for the cross-check suites run by `verify`
    VERIFY_LEVELS={
        'fast': {'n_max': 12, 'grid': 8, 'cases': 200},
        'full': {'n_max': 40, 'grid': 15, 'cases': 500},
    },
    LOG_LEVEL='WARNING',
)

# Flask's logger writes to stderr, stdout is kept for data
app.logger.setLevel(app.config['LOG_LEVEL'])
