#include <pybind11/pybind11.h>

PYBIND11_MODULE(_superteich, m) { m.doc() = "placeholder"; }
