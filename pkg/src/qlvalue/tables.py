"""Reference fixtures: known central-value valuations for small twists.

Each row of TABLE_PRIME is (v2, D, i_symbol) for a prime twist D = D_1;
each row of TABLE_PRIME_SQUARE is (v2, D_1, D_2_base, i_symbol) for
D = D_1 * D_2_base^2.  Valuations are given as strings ("-1/2", "0",
"inf", ...), twists in the canonical a+bi spelling used by GaussInt.parse.
"""

TABLE_PRIME = [
    ('-1/2', '2i-1', 'i'),
    ('0', '-3', '-1'),
    ('-1/2', '-2i+3', '-i'),
    ('inf', '-4i+1', '1'),
    ('-1/2', '2i-5', '-i'),
    ('-1/2', '6i-1', 'i'),
    ('0', '-4i+5', '-1'),
    ('inf', '-7', '1'),
    ('-1/2', '-2i+7', 'i'),
    ('-1/2', '-6i-5', '-i'),
    ('0', '8i-3', '-1'),
    ('0', '8i+5', '-1'),
    ('1', '-4i+9', '1'),
    ('-1/2', '10i-1', 'i'),
    ('-1/2', '10i+3', '-i'),
    ('inf', '-8i-7', '1'),
    ('0', '-11', '-1'),
    ('0', '-4i-11', '-1'),
    ('-1/2', '-10i+7', 'i'),
    ('-1/2', '6i+11', '-i'),
    ('-1/2', '2i-13', '-i'),
    ('-1/2', '-10i-9', 'i'),
    ('inf', '-12i-7', '1'),
    ('-1/2', '14i-1', 'i'),
    ('-1/2', '-2i+15', 'i'),
    ('0', '8i+13', '-1'),
    ('1', '-4i-15', '1'),
    ('inf', '-16i+1', '1'),
    ('-1/2', '-10i-13', '-i'),
    ('-1/2', '-14i-9', 'i'),
    ('0', '16i+5', '-1'),
    ('-1/2', '2i-17', 'i'),
    ('0', '-12i+13', '-1'),
    ('-1/2', '14i+11', '-i'),
    ('1', '16i+9', '1'),
    ('-1/2', '-18i-5', '-i'),
    ('inf', '-8i+17', '1'),
    ('0', '-19', '-1'),
    ('-1/2', '18i+7', 'i'),
    ('-1/2', '10i-17', 'i'),
    ('-1/2', '-6i+19', '-i'),
    ('1', '-20i+1', '1'),
    ('0', '20i-3', '-1'),
    ('-1/2', '-14i+15', 'i'),
    ('inf', '-12i+17', '1'),
    ('inf', '20i-7', '1'),
    ('0', '-4i+21', '-1'),
    ('-1/2', '10i+19', '-i'),
    ('-1/2', '22i-5', '-i'),
    ('0', '-20i-11', '-1'),
    ('inf', '-23', '1'),
    ('-1/2', '10i-21', '-i'),
    ('-1/2', '-14i+19', '-i'),
    ('0', '20i+13', '-1'),
    ('inf', '-24i+1', '1'),
    ('inf', '-8i-23', '1'),
    ('0', '-24i+5', '-1'),
    ('-1/2', '-18i-17', 'i'),
    ('0', '-16i-19', '-1'),
    ('1', '-4i+25', '1'),
    ('-1/2', '-22i-13', '-i'),
    ('-1/2', '6i-25', 'i'),
    ('inf', '-12i-23', '1'),
    ('-1/2', '26i-1', 'i'),
    ('-1/2', '-26i-5', '-i'),
    ('-1/2', '-22i+15', 'i'),
    ('-1/2', '-2i+27', '-i'),
    ('-1/2', '26i-9', 'i'),
    ('0', '-20i-19', '-1'),
    ('inf', '-12i+25', '1'),
    ('-1/2', '-22i-17', 'i'),
    ('-1/2', '26i+11', '-i'),
    ('0', '28i+5', '-1'),
    ('-1/2', '-14i-25', 'i'),
    ('-1/2', '-10i+27', '-i'),
    ('-1/2', '18i+23', 'i'),
    ('0', '-4i+29', '-1'),
    ('-1/2', '-6i-29', '-i'),
    ('1', '16i+25', '1'),
    ('2', '20i-23', '1'),
]

TABLE_PRIME_SQUARE = [
    ('inf', '-3', '2i-1', '1'),
    ('0', '-2i+3', '2i-1', 'i'),
    ('0', '2i-1', '-3', 'i'),
    ('1', '-4i+1', '2i-1', '-1'),
    ('1/2', '2i-5', '2i-1', 'i'),
    ('0', '2i-1', '-2i+3', '-i'),
    ('0', '6i-1', '2i-1', '-i'),
    ('inf', '-4i+5', '2i-1', '1'),
    ('1/2', '-2i+3', '-3', '-i'),
    ('1/2', '-7', '2i-1', '-1'),
    ('inf', '-4i+1', '-3', '1'),
    ('1/2', '2i-1', '-4i+1', 'i'),
    ('1', '-3', '-2i+3', '1'),
    ('0', '2i-5', '-3', '-i'),
    ('1/2', '-3', '-4i+1', '-1'),
    ('1/2', '-4i+1', '-2i+3', '-1'),
    ('inf', '6i-1', '-3', 'i'),
    ('1', '-11', '2i-1', '1'),
    ('1/2', '-4i+5', '-3', '-1'),
    ('0', '-2i+3', '-4i+1', '-i'),
    ('2', '-7', '-3', '1'),
    ('inf', '2i-1', '2i-5', '-i'),
    ('0', '2i-5', '-2i+3', 'i'),
    ('0', '6i-1', '-2i+3', '-i'),
    ('0', '2i-1', '6i-1', '-i'),
    ('1', '-4i+5', '-2i+3', '1'),
    ('3/2', '-3', '2i-5', '1'),
    ('1/2', '-7', '-2i+3', '-1'),
    ('inf', '2i-5', '-4i+1', '-i'),
    ('0', '2i-1', '-4i+5', 'i'),
    ('1', '-19', '2i-1', '1'),
    ('inf', '-11', '-3', '-1'),
    ('1/2', '6i-1', '-4i+1', 'i'),
    ('0', '-2i+3', '2i-5', 'i'),
    ('inf', '-4i+5', '-4i+1', '-1'),
    ('0', '2i-1', '-7', 'i'),
    ('1', '-3', '6i-1', '1'),
    ('1/2', '-23', '2i-1', '-1'),
    ('3/2', '-7', '-4i+1', '1'),
    ('inf', '-4i+1', '2i-5', '-1'),
    ('1/2', '-3', '-4i+5', '-1'),
    ('0', '-2i+3', '6i-1', 'i'),
    ('inf', '-11', '-2i+3', '1'),
    ('inf', '-3', '-7', '-1'),
    ('1/2', '-2i+3', '-4i+5', '-i'),
    ('1', '-4i+1', '6i-1', '-1'),
    ('1', '-31', '2i-1', '-1'),
    ('2', '-4i+1', '-4i+5', '1'),
    ('inf', '-19', '-3', '-1'),
    ('0', '6i-1', '2i-5', '-i'),
    ('0', '-2i+3', '-7', '-i'),
    ('1', '-4i+5', '2i-5', '1'),
    ('1/2', '-11', '-4i+1', '-1'),
    ('0', '2i-5', '6i-1', 'i'),
    ('5/2', '-4i+1', '-7', '1'),
    ('1', '-7', '2i-5', '-1'),
    ('inf', '-23', '-3', '1'),
    ('inf', '-43', '2i-1', '1'),
    ('inf', '2i-5', '-4i+5', '-i'),
    ('1/2', '-47', '2i-1', '-1'),
    ('3/2', '-4i+5', '6i-1', '1'),
    ('3/2', '-19', '-2i+3', '1'),
    ('0', '6i-1', '-4i+5', 'i'),
    ('1', '-7', '6i-1', '-1'),
    ('1/2', '2i-5', '-7', '-i'),
    ('1/2', '2i-1', '-11', 'i'),
    ('2', '-31', '-3', '1'),
    ('3/2', '-7', '-4i+5', '1'),
    ('1/2', '6i-1', '-7', 'i'),
    ('2', '-23', '-2i+3', '-1'),
    ('1/2', '-4i+5', '-7', '-1'),
    ('3/2', '-11', '2i-5', '1'),
    ('1', '-19', '-4i+1', '-1'),
    ('inf', '-3', '-11', '-1'),
    ('inf', '-3', '-11', '-1'),
    ('inf', '-43', '-3', '-1'),
    ('3/2', '-23', '-4i+1', '1'),
    ('1/2', '-31', '-2i+3', '-1'),
    ('1', '-11', '6i-1', '1'),
    ('3', '-47', '-3', '1'),
]
