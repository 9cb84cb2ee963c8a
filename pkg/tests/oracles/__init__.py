"""Independent oracle implementations used to pin expected test values.

Nothing in here imports the package under test.  Each oracle is written
directly from first principles (naive reduction, brute-force search,
exhaustive enumeration) so that agreement with the package is meaningful.
"""
