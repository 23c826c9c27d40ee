collect_ignore = ["src/chiy/__main__.py", "benchmarks"]
