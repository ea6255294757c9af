"""Reference implementations used by the test suite; not part of the CLI surface."""
