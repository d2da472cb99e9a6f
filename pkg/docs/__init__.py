# Makes docs/ a package so that ruff does not flag conf.py as an implicit namespace module
