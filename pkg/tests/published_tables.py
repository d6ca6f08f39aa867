"""Published comparison rows for catalog graphs: (closed Hoffman, first inertial, Wilf, exact, bold).

``None`` marks a timed-out entry. Keys are catalog names.
"""

T = None

TABLE_T2 = {
    "Frucht": (6, 5, 10, 6, True), "Meredith": (7, 7, 20, 13, False), "Golomb": (7, 5, 15, T, False),
    "Moebius-Kantor": (6, 3, 13, 6, True), "Bidiakis cube": (6, 5, 12, 8, False),
    "Moser spindle": (6, 4, 10, 9, False), "Gray": (6, 5, 13, 6, True), "Nauru": (6, 4, 13, 6, True),
    "Grotzsch": (7, 5, 19, 10, False), "Pappus": (6, 4, 13, 6, True), "Petersen": (5, 3, 13, 5, True),
    "Robertson": (8, 4, 25, T, False), "Heawood": (7, 4, 13, 7, True), "Herschel": (6, 5, 14, T, False),
    "Shrikhande": (16, 7, 40, T, False), "Sousselier": (6, 4, 18, 7, False), "Clebsch": (10, 4, 37, 10, True),
    "Hoffman-Singleton": (18, T, 85, T, False), "Coxeter": (6, 5, 13, T, False),
    "Desargues": (5, 3, 13, 5, True), "Thomsen": (9, 9, 9, 9, True), "Tietze": (6, 3, 12, 7, False),
    "Krackhardt Kite": (7, 3, 15, 14, False), "Durer": (6, 4, 11, 6, True),
    "Truncated Tetrahedron": (6, 5, 10, 6, True), "Dyck": (6, 3, 13, 6, True),
    "Ellingham-Horton 54": (6, 4, 13, 6, True), "Tutte-Coxeter": (5, 5, 13, T, False),
    "Wagner": (6, 4, 11, 10, False), "Flower Snark": (5, 4, 13, 6, False), "Markstroem": (6, 6, 10, 6, True),
    "Folkman": (8, 8, 22, 10, False), "Foster": (5, 4, 13, T, False), "McGee": (6, 4, 13, T, False),
    "Franklin": (6, 3, 12, 6, True), "Hexahedron": (6, 3, 11, 6, True), "Dodecahedron": (5, 4, 13, 5, True),
    "Octahedron": (12, 12, 12, 12, True), "Icosahedron": (15, 8, 25, T, False),
}

TABLE_T3 = {
    "Frucht": (9, 6, 16, 10, False), "Meredith": (18, 14, 34, T, False), "Moebius-Kantor": (12, 5, 23, 12, True),
    "Bidiakis cube": (9, 5, 17, 11, False), "Gray": (9, 5, 29, 9, True), "Nauru": (9, 6, 27, 9, True),
    "Pappus": (9, 4, 25, 9, True), "Robertson": (19, 19, 37, 37, True), "Sousselier": (8, 6, 26, 24, False),
    "Coxeter": (11, 5, 29, T, False), "Desargues": (15, 6, 25, T, False), "Krackhardt Kite": (9, 5, 17, 17, True),
    "Durer": (9, 9, 16, 12, False), "Truncated Tetrahedron": (9, 5, 17, 9, False), "Dyck": (12, 7, 27, T, False),
    "Ellingham-Horton 54": (9, 6, 26, 12, False), "Tutte-Coxeter": (9, 5, 29, T, False),
    "Flower Snark": (10, 6, 25, 15, False), "Markstroem": (8, 6, 18, 10, False), "Foster": (9, T, 29, T, False),
    "McGee": (9, 4, 29, T, False), "Dodecahedron": (10, 8, 21, 10, True),
}
