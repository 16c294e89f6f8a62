"""Named prime genus-two manifolds by tetrahedra count: orientable and non-orientable lists.

Rows are ``tetrahedra|6-tuple|name|position``; the 6-tuple and position are
carried as opaque strings.
"""

TABLE2 = """\
18|(3,3,3,2,2,2)|S3/Q8=(S2,(2,1),(2,1),(2,-1))|P.6
22|(3,3,5,2,2,4)|S3/Q12=(S2,(2,1),(2,1),(3,-2))|P.14
24|(4,4,4,1,1,1)|S3/Q8 x Z3=(S2,(2,1),(2,1),(2,1))|P.25
24|(4,4,4,1,1,5)|S3/D24=(S2,(2,1),(2,1),(3,-1))|P.29
24|(4,4,4,3,3,3)|S3/P24=(S2,(2,1),(3,1),(3,-2))|P.11
26|(3,3,7,2,2,6)|S3/Q16=(S2,(2,1),(2,1),(4,-3))|P.7
28|(4,4,6,1,1,1)|S3/D48=(S2,(2,1),(2,1),(3,1))|P.50
28|(4,4,6,1,1,7)|S3/P'72=(S2,(2,1),(3,1),(3,-1))|P.34
28|(4,4,6,1,5,1)|S3/Q16 x Z3=(S2,(2,1),(2,1),(4,-1))|P.26
28|(4,4,6,3,3,5)|S3/P48=(S2,(2,1),(3,1),(4,-3))|P.3
30|(3,3,9,2,2,8)|S3/Q20=(S2,(2,1),(2,1),(5,-4))|P.15
30|(5,5,5,2,2,2)|E3/P2_12_12_1=(RP2,(2,1),(2,-1))|P.18
30|(5,5,5,4,4,4)|S3/P120=(S2,(2,1),(3,1),(5,-4))|P.1
32|(4,4,8,1,1,1)|S3/Q16 x Z5=(S2,(2,1),(2,1),(4,1))|P.40
32|(4,4,8,1,1,9)|S3/P48 x Z5=(S2,(2,1),(3,2),(4,-3))|P.38
32|(4,4,8,1,5,1)|S3/D80=(S2,(2,1),(2,1),(5,-1))|P.51
32|(4,6,6,1,1,1)|S3/P24 x Z7=(S2,(2,1),(3,1),(3,1))|P.59
32|(4,6,6,1,1,9)|TB(-1 1;-1 0)=(S2,(3,1),(3,1),(3,-1))|P.13
32|(4,6,6,1,7,1)|S3/P48 x Z7=(S2,(2,1),(3,1),(4,-1))|P.46
32|(4,6,6,5,5,3)|E3/P4_1=TB(0 1;-1 0)=(S2,(2,1),(4,1),(4,-3))|P.74
34|(3,3,11,2,2,4)|S3/D40=(S2,(2,1),(2,1),(5,-3))|P.30
34|(3,3,11,2,2,10)|S3/Q24=(S2,(2,1),(2,1),(6,-5))|P.8
34|(3,7,7,2,2,2)|S3/P24 x Z5=(S2,(2,1),(3,2),(3,-1))|P.48
34|(5,5,7,2,4,2)|(RP2,(2,1),(2,1))|P.19
34|(5,5,7,2,6,6)|E3/P3_1=TB(0 1;-1 -1)=(S2,(3,1),(3,1),(3,-2))|P.75
34|(5,5,7,4,4,6)|E3/P6_1=TB(1 -1;1 0)=(S2,(2,1),(3,1),(6,-5))|P.72
36|(4,4,10,1,1,1)|S3/D40 x Z3=(S2,(2,1),(2,1),(5,1))|P.63
36|(4,4,10,1,1,7)|S3/Q12 x Z5=(S2,(2,1),(2,1),(3,2))|P.57
36|(4,4,10,1,1,11)|S3/P120 x Z11=(S2,(2,1),(3,2),(5,-4))|P.42
36|(4,4,10,1,5,1)|S3/Q24 x Z5=(S2,(2,1),(2,1),(6,-1))|P.41
36|(4,4,10,1,5,7)|S3/Q20 x Z3=(S2,(2,1),(2,1),(5,-2))|P.43
36|(4,4,10,3,3,3)|S3/P120 x Z7=(S2,(2,1),(3,1),(5,-3))|P.28
36|(4,6,8,1,1,1)|S3/P48 x Z13=(S2,(2,1),(3,1),(4,1))|P.68
36|(4,6,8,1,1,11)|(S2,(3,1),(3,2),(4,-3))|P.35
36|(4,6,8,1,7,1)|S3/P120 x Z19=(S2,(2,1),(3,1),(5,-1))|P.56
36|(4,6,8,3,9,13)|(S2,(2,1),(4,1),(4,-1))|P.33
36|(4,6,8,5,5,11)|(S2,(2,1),(4,1),(5,-4))|P.4
36|(6,6,6,1,1,1)|(S2,(3,1),(3,1),(3,1))|P.37
36|(6,6,6,1,1,9)|(S2,(3,1),(3,1),(4,-1))|P.49
36|(6,6,6,1,7,7)|TB(-1 0;-1 -1)=(K,(1,1))|P.76
36|(6,6,6,5,5,5)|TB(1 0;1 1)=(T,(1,1))|P.78
38|(3,3,13,2,2,12)|S3/Q28=(S2,(2,1),(2,1),(7,-6))|P.16
38|(5,5,9,2,2,2)|(RP2,(2,1),(3,-1))|P.66
38|(5,5,9,4,4,8)|(S2,(2,1),(3,1),(7,-6))|P.2
38|(5,7,7,4,6,12)|(S2,(3,1),(3,1),(4,-3))|P.12
40|(4,4,12,1,1,1)|S3/Q24 x Z7=(S2,(2,1),(2,1),(6,1))|P.47
40|(4,4,12,1,1,5)|S3/Q8 x Z5=(S2,(2,1),(2,1),(2,3))|P.39
40|(4,4,12,1,1,13)|(S2,(2,1),(3,2),(6,-5))|P.44
40|(4,4,12,1,5,1)|S3/D56 x Z3=(S2,(2,1),(2,1),(7,-1))|P.64
40|(4,6,10,1,1,1)|S3/P120 x Z31=(S2,(2,1),(3,1),(5,1))|P.70
40|(4,6,10,1,1,13)|(S2,(3,1),(3,2),(5,-4))|P.36
40|(4,6,10,1,7,1)|(S2,(2,1),(3,1),(6,-1))|P.65
40|(4,6,10,3,5,3)|(S2,(2,1),(4,1),(5,-3))|P.23
40|(4,6,10,3,9,15)|(S2,(2,1),(4,3),(5,-4))|P.55
40|(4,6,10,5,1,1)|S3/P48 x Z11=(S2,(2,1),(3,2),(4,-1))|P.61
40|(4,6,10,5,5,13)|(S2,(2,1),(4,1),(6,-5))|P.10
40|(4,6,10,5,9,3)|(S2,(3,1),(3,2),(3,-1))|P.27
40|(4,6,10,7,1,1)|S3/P'216=(S2,(2,1),(3,1),(3,2))|P.69
40|(4,6,10,7,3,15)|S3/P120 x Z13=(S2,(2,1),(3,1),(5,-2))|P.45
40|(4,8,8,1,1,1)|(S2,(2,1),(4,1),(4,1))|P.53
40|(4,8,8,1,1,13)|(S2,(3,2),(4,1),(4,-3))|P.32
40|(4,8,8,1,9,1)|(S2,(2,1),(4,1),(5,-1))|P.62
40|(4,8,8,5,5,13)|(S2,(2,1),(5,1),(5,-4))|P.20
40|(6,6,8,1,1,1)|(S2,(3,1),(3,1),(4,1))|P.71
40|(6,6,8,1,1,11)|(S2,(3,1),(4,1),(4,-1))|P.52
40|(6,6,8,1,9,1)|(S2,(3,1),(3,1),(5,-1))|P.60
40|(6,6,8,5,5,7)|TB(0 1;-1 3)=Q2(0,1)|P.73
40|(6,6,8,5,11,7)|TB(0 1;-1 -3)=Q1(1,1)|P.77
42|(3,3,15,2,2,6)|S3/D56=(S2,(2,1),(2,1),(7,-5))|P.31
42|(3,3,15,2,2,14)|S3/Q32=(S2,(2,1),(2,1),(8,-7))|P.9
42|(3,7,11,4,2,2)|S3/P120 x Z17=(S2,(2,1),(3,2),(5,-3))|P.54
42|(5,5,11,2,4,2)|(RP2,(2,1),(3,1))|P.67
42|(5,5,11,4,4,10)|(S2,(2,1),(3,1),(8,-7))|P.5
42|(5,5,11,4,8,4)|(S2,(2,1),(3,1),(7,-5))|P.21
42|(5,7,9,2,4,4)|(D,(2,1),(2,-3)) U(0 1;1 0) (D,(2,1),(3,-2))|P.58
42|(5,7,9,4,6,14)|(S2,(3,1),(3,1),(5,-4))|P.24
42|(7,7,7,2,2,2)|Q1(2,-3)|P.22
42|(7,7,7,2,6,10)|(D,(2,1),(2,1)) U(0 1;1 0) (D,(2,1),(3,1))|P.17
"""

TABLE3 = """\
16||RP2xS1|
32||E3/Bb=TB(0 1;1 0)|
32||E3/Pna2_1=(RP2;(2,1),(2,1))|
34||TB(0 1;1 -1)|
36||TB(2 1;1 0)|
40||TB(3 1;1 0)|
40||(RP2;(2,1),(3,1))|
"""
