"""Conway's 92 common and 2 transuranic elements, with their decay products.

Words use the literal symbol ``d`` for a digit of value four or more.
"""

# name, atomic number, word, decay products
ELEMENTS = [
    ('H', 1, '22', ('H',)),
    ('He', 2, '13112221133211322112211213322112', ('Hf', 'Pa', 'H', 'Ca', 'Li')),
    ('Li', 3, '312211322212221121123222112', ('He',)),
    ('Be', 4, '111312211312113221133211322112211213322112', ('Ge', 'Ca', 'Li')),
    ('B', 5, '1321132122211322212221121123222112', ('Be',)),
    ('C', 6, '3113112211322112211213322112', ('B',)),
    ('N', 7, '111312212221121123222112', ('C',)),
    ('O', 8, '132112211213322112', ('N',)),
    ('F', 9, '31121123222112', ('O',)),
    ('Ne', 10, '111213322112', ('F',)),
    ('Na', 11, '123222112', ('Ne',)),
    ('Mg', 12, '3113322112', ('Pm', 'Na')),
    ('Al', 13, '1113222112', ('Mg',)),
    ('Si', 14, '1322112', ('Al',)),
    ('P', 15, '311311222112', ('Ho', 'Si')),
    ('S', 16, '1113122112', ('P',)),
    ('Cl', 17, '132112', ('S',)),
    ('Ar', 18, '3112', ('Cl',)),
    ('K', 19, '1112', ('Ar',)),
    ('Ca', 20, '12', ('K',)),
    ('Sc', 21, '3113112221133112', ('Ho', 'Pa', 'H', 'Ca', 'Co')),
    ('Ti', 22, '11131221131112', ('Sc',)),
    ('V', 23, '13211312', ('Ti',)),
    ('Cr', 24, '31132', ('V',)),
    ('Mn', 25, '111311222112', ('Cr', 'Si')),
    ('Fe', 26, '13122112', ('Mn',)),
    ('Co', 27, '32112', ('Fe',)),
    ('Ni', 28, '11133112', ('Zn', 'Co')),
    ('Cu', 29, '131112', ('Ni',)),
    ('Zn', 30, '312', ('Cu',)),
    ('Ga', 31, '13221133122211332', ('Eu', 'Ca', 'Ac', 'H', 'Ca', 'Zn')),
    ('Ge', 32, '31131122211311122113222', ('Ho', 'Ga')),
    ('As', 33, '11131221131211322113322112', ('Ge', 'Na')),
    ('Se', 34, '13211321222113222112', ('As',)),
    ('Br', 35, '3113112211322112', ('Se',)),
    ('Kr', 36, '11131221222112', ('Br',)),
    ('Rb', 37, '1321122112', ('Kr',)),
    ('Sr', 38, '3112112', ('Rb',)),
    ('Y', 39, '1112133', ('Sr', 'U')),
    ('Zr', 40, '12322211331222113112211', ('Y', 'H', 'Ca', 'Tc')),
    ('Nb', 41, '1113122113322113111221131221', ('Er', 'Zr')),
    ('Mo', 42, '13211322211312113211', ('Nb',)),
    ('Tc', 43, '311322113212221', ('Mo',)),
    ('Ru', 44, '132211331222113112211', ('Eu', 'Ca', 'Tc')),
    ('Rh', 45, '311311222113111221131221', ('Ho', 'Ru')),
    ('Pd', 46, '111312211312113211', ('Rh',)),
    ('Ag', 47, '132113212221', ('Pd',)),
    ('Cd', 48, '3113112211', ('Ag',)),
    ('In', 49, '11131221', ('Cd',)),
    ('Sn', 50, '13211', ('In',)),
    ('Sb', 51, '3112221', ('Pm', 'Sn')),
    ('Te', 52, '1322113312211', ('Eu', 'Ca', 'Sb')),
    ('I', 53, '311311222113111221', ('Ho', 'Te')),
    ('Xe', 54, '11131221131211', ('I',)),
    ('Cs', 55, '13211321', ('Xe',)),
    ('Ba', 56, '311311', ('Cs',)),
    ('La', 57, '11131', ('Ba',)),
    ('Ce', 58, '1321133112', ('La', 'H', 'Ca', 'Co')),
    ('Pr', 59, '31131112', ('Ce',)),
    ('Nd', 60, '111312', ('Pr',)),
    ('Pm', 61, '132', ('Nd',)),
    ('Sm', 62, '311332', ('Pm', 'Ca', 'Zn')),
    ('Eu', 63, '1113222', ('Sm',)),
    ('Gd', 64, '13221133112', ('Eu', 'Ca', 'Co')),
    ('Tb', 65, '3113112221131112', ('Ho', 'Gd')),
    ('Dy', 66, '111312211312', ('Tb',)),
    ('Ho', 67, '1321132', ('Dy',)),
    ('Er', 68, '311311222', ('Ho', 'Pm')),
    ('Tm', 69, '11131221133112', ('Er', 'Ca', 'Co')),
    ('Yb', 70, '1321131112', ('Tm',)),
    ('Lu', 71, '311312', ('Yb',)),
    ('Hf', 72, '11132', ('Lu',)),
    ('Ta', 73, '13112221133211322112211213322113', ('Hf', 'Pa', 'H', 'Ca', 'W')),
    ('W', 74, '312211322212221121123222113', ('Ta',)),
    ('Re', 75, '111312211312113221133211322112211213322113', ('Ge', 'Ca', 'W')),
    ('Os', 76, '1321132122211322212221121123222113', ('Re',)),
    ('Ir', 77, '3113112211322112211213322113', ('Os',)),
    ('Pt', 78, '111312212221121123222113', ('Ir',)),
    ('Au', 79, '132112211213322113', ('Pt',)),
    ('Hg', 80, '31121123222113', ('Au',)),
    ('Tl', 81, '111213322113', ('Hg',)),
    ('Pb', 82, '123222113', ('Tl',)),
    ('Bi', 83, '3113322113', ('Pm', 'Pb')),
    ('Po', 84, '1113222113', ('Bi',)),
    ('At', 85, '1322113', ('Po',)),
    ('Rn', 86, '311311222113', ('Ho', 'At')),
    ('Fr', 87, '1113122113', ('Rn',)),
    ('Ra', 88, '132113', ('Fr',)),
    ('Ac', 89, '3113', ('Ra',)),
    ('Th', 90, '1113', ('Ac',)),
    ('Pa', 91, '13', ('Th',)),
    ('U', 92, '3', ('Pa',)),
    ('Np', 93, '1311222113321132211221121332211d', ('Hf', 'Pa', 'H', 'Ca', 'Pu')),
    ('Pu', 94, '31221132221222112112322211d', ('Np',)),
]
