# Keeps the tests directory on sys.path so test modules can share the
# oracles and strategies helpers.
