from symx import SymmetryDatum


def mk(n, orientable, h, handles=(), boundary=(), cones=()):
    return SymmetryDatum(
        n, orientable, h, tuple(handles), tuple(boundary), tuple(cones)
    )
