"""One-off check used while curating data/tau_values.txt: recompute every
candidate regression entry and flag any whose recorded value is off by more
than 1e-3 from the true root. One candidate is expected to flag: the
g3 rule 8 4-literal entry's recorded 1.4454 is a known misprint (the true
root of (1.5, 2.5) is 1.4253), so the fixture ships without it."""

from gixsat.analysis import branching_factor

CANDIDATES = [
    # g2 solver rules
    ("g2 rule 8, exactly-1 clause of 4 literals", (2.2156, 2.2156), 1.3674),
    ("g2 rule 8, exactly-1 clause of 5+ literals", (3.0195, 1.6078), 1.3633),
    ("g2 rule 9, opposite shared literal", (3.0195, 3.0195), 1.2581),
    ("g2 rule 9, same shared literal", (4.0195, 2.0195), 1.2699),
    ("g2 rule 10, catch-all", (3.0195, 1.6078), 1.3633),
    ("g2 rule 11, 5 literals, all weight 1", (4, 1.5883), 1.3051),
    ("g2 rule 11, negated doubled literal in a 3-clause", (3.2156, 2.4117), 1.2817),
    ("g2 rule 11, doubled literal plus one single shared", (4.0195, 1.4117), 1.3220),
    ("g2 rule 11, doubled literal alone shared", (4.8234, 1.4117), 1.2852),
    ("g2 rule 11, three singles in 3-clauses", (5.2351, 1), 1.3143),
    ("g2 rule 11, 6+ literals, doubled literal in a 3-clause", (4.0195, 1.4117), 1.3220),
    ("g2 rule 11, 6+ literals, doubled literal weight 1", (4.2156, 1), 1.3665),
    ("g2 rule 13, all weight 1", (2, 3), 1.3248),
    ("g2 rule 13, two vars in 3-clauses, same polarity", (6.4312, 1.6078, 4.4312), 1.3620),
    ("g2 rule 13, two vars in 3-clauses, mixed polarity", (5.4312, 5.4312, 1.6078), 1.3540),
    ("g2 rule 14, three neighbours, positive", (3.3917, 1.4117), 1.3602),
    ("g2 rule 14, three neighbours, negative", (2.3917, 2.4117), 1.3346),
    ("g2 rule 14, follow-up, long remainder", (3.0395, 1.8434), 1.3365),
    ("g2 rule 14, follow-up, 2-literal remainder", (2.2356, 2.4512), 1.3445),
    ("g2 rule 14, follow-up, negated neighbours", (2.2356, 3.8434), 1.2635),
    ("g2 rule 14, two neighbours, positive", (3.39, 1.4117), 1.3604),
    ("g2 rule 14, two neighbours, negative", (2.39, 2.4117), 1.3348),
    ("g2 rule 14, two-neighbour follow-up, positive", (4.4334, 1.0217), 1.3502),
    ("g2 rule 14, two-neighbour follow-up, negative", (3.4334, 2.0217), 1.2973),
    ("g2 rule 14, one neighbour, 5+ remainder", (3.3922, 1.4117), 1.3602),
    ("g2 rule 14, one neighbour, negative, 4-remainder", (2.1961, 2.4117), 1.3514),
    ("g2 rule 14, one neighbour, positive, 4-remainder", (3.1961, 1.6117), 1.3499),
    ("g2 rule 14, repayment on a 4-literal clause", (2.8, 1.8), 1.3587),
    ("g2 rule 15, one-sided extra variable", (1, 5), 1.3248),
    ("g2 rule 15, two shared same, 3+3 rest", (8, 2.1766, 3.1766), 1.3485),
    ("g2 rule 15, two shared same, 3+4 rest", (9, 2.3727, 2.5883), 1.3582),
    ("g2 rule 15, two shared same, 4+4 rest", (10, 2.5688, 2.4), 1.3496),
    ("g2 rule 15, repayment on a 4-literal clause", (2.8, 1.8), 1.3586),
    ("g2 rule 15, two shared same, 4+5 rest", (11, 2.7649, 2), 1.3611),
    ("g2 rule 15, two shared flipped", (5, 1.7844, 5), 1.3633),
    ("g2 rule 15, mixed shared pair, 3+3 rest", (5.5883, 5.5883, 1.46), 1.3587),
    ("g2 rule 15, repayment with survivor kept", (2.77, 1.77), 1.3644),
    ("g2 rule 15, mixed shared pair, 3+4 rest", (5.7844, 6.5883, 1.23), 1.3530),
    ("g2 rule 15, mixed shared pair, 4+4 rest", (6.7844, 6.7844, 1), 1.3510),
    ("g2 rule 15, two same one flipped", (2.5205, 2), 1.3609),
    ("g2 rule 15, follow-up 2+2 rests", (2.4795, 2.4795), 1.3226),
    ("g2 rule 15, follow-up 2+3 rests", (3.2834, 1.8717), 1.3182),
    ("g2 rule 15, follow-up 3+3 rests", (2.6756, 2.6756), 1.2958),
    ("g2 rule 15, common 3-subclause, 2+2 rests", (4, 2.5883, 7), 1.3057),
    ("g2 rule 15, common 3-subclause, 2+3 rests", (5, 2.1766, 5.5883), 1.3230),
    ("g2 rule 15, common 3-subclause, 3+3 rests", (6, 1.7649, 4.1766), 1.3671),
    ("g2 rule 15, common 3-subclause, 3+4 rests", (7, 1.961, 3.5883), 1.3579),
    ("g2 rule 15, common 3-subclause, 4+4 rests", (8, 2.1571, 3), 1.3592),
    ("g2 rule 16, mixed heavy, long negative clause", (2.5688, 1.9805), 1.3587),
    ("g2 rule 16, mixed heavy, short negative clause", (2.7988, 1.7844), 1.3604),
    ("g2 rule 16, positive heavy, rests 4/4/4", (3.3532, 1.69), 1.3311),
    ("g2 rule 16, positive heavy, rests 4/4/5+", (3.5493, 1.46), 1.3438),
    ("g2 rule 16, positive heavy, rests 4/5+/5+", (3.7454, 1.23), 1.3609),
    ("g2 rule 16, positive heavy, rests 5+/5+/6+", (4.3376, 1), 1.3592),
    ("g2 rule 16, repayment on a 5-literal exactly-1 clause", (3.6234, 1.4078), 1.3454),
    ("g2 rule 16, two heavy variables", (9.1766, 4.7844, 4.7844, 2.245), 1.3673),
    ("g2 rule 16, pair repayment on 4-literal clause", (2.755, 1.755), 1.3673),
    ("g2 rule 16, pair repayment on 5-literal exactly-1 clauses", (3, 1.5883), 1.3671),
    # g3 solver rules
    ("g3 rule 6, 3-literal exactly-1 clause", (1.0955, 2.0955), 1.5687),
    ("g3 rule 6, 4-literal exactly-1 clause", (1.794, 1.794), 1.4717),
    ("g3 rule 6, 5+-literal exactly-1 clause", (2.4925, 1.397), 1.4431),
    ("g3 rule 7, 4-literal with doubled literal", (2.625, 2.625), 1.3023),
    ("g3 rule 7, 5+-literal with doubled literal", (3.5, 0.875), 1.4454),
    ("g3 rule 8, 4-literal exactly-2 clause", (1.5, 2.5), 1.4454),
    ("g3 rule 8, 5-literal with follow-ups", (3.375, 3.375, 2.375, 3.375), 1.5686),
    ("g3 rule 8, 6-literal with follow-up", (5.25, 1.456, 3.25, 4.25), 1.5641),
    ("g3 rule 8, 7+-literal", (6.125, 1.6325, 1.75), 1.5669),
    ("g3 rule 9, tripled literal", (3, 1), 1.4656),
    ("g3 rule 9, doubled literal, 3 singles", (1.603, 4), 1.3037),
    ("g3 rule 9, doubled literal, 4 singles with follow-up", (4, 4, 1), 1.5437),
    ("g3 rule 9, doubled plus doubled-single mix", (2.9045, 1), 1.4763),
    ("g3 rule 9, doubled literal, 5 singles", (2.5075, 1), 1.5279),
    ("g3 rule 10, 6-literal exactly-3 clause", (1.625, 1.625), 1.5320),
    ("g3 rule 10, 7-literal exactly-3 clause", (3.5075, 1.625, 2.625), 1.5647),
    ("g3 rule 10, 8-literal with follow-up", (7, 5.206, 1.75, 2), 1.5687),
    ("g3 rule 10, 9+-literal", (4.1105, 1.875, 2), 1.5642),
    # g4 solver rules
    ("g4 rule 6, 3-literal exactly-1 clause", (0.9392, 1.9392), 1.6544),
    ("g4 rule 6, 4-literal exactly-1 clause", (1.5856, 1.5856), 1.5483),
    ("g4 rule 6, 5+-literal exactly-1 clause", (2.232, 1.2928), 1.4970),
    ("g4 rule 7, doubled literal in exactly-2 clause", (3.3504, 0.8376), 1.4693),
    ("g4 rule 8, 4-literal exactly-2 clause", (1.3504, 2.3504), 1.4690),
    ("g4 rule 8, 5-literal with follow-ups", (3.188, 3.188, 2.188, 3.188), 1.6157),
    ("g4 rule 8, 6+-literal", (5.0256, 1.44, 1.6752), 1.6493),
    ("g4 rule 9, tripled literal", (2.8236, 0.9412), 1.5010),
    ("g4 rule 9, doubled literal, 3 singles", (1.8256, 3.7648), 1.2959),
    ("g4 rule 9, doubled literal, 4+ distinct", (2.1204, 0.9412), 1.6136),
    ("g4 rule 10, 6-literal exactly-3 clause", (1.4592, 1.4592), 1.6081),
    ("g4 rule 10, 7-literal exactly-3 clause", (3.3564, 1.4004, 2.4004), 1.6363),
    ("g4 rule 10, 8-literal with follow-up", (3.6512, 1.504, 3.3416, 3.3416), 1.6544),
    ("g4 rule 10, 9+-literal", (3.946, 1.6076, 1.8824), 1.6301),
    ("g4 rule 11, quadrupled literal", (2, 1), 1.6181),
    ("g4 rule 11, tripled literal, 3+ distinct rest", (2.0608, 1), 1.6053),
    ("g4 rule 11, doubled literal, 4 distinct rest", (1.6496, 5), 1.2591),
    ("g4 rule 11, doubled literal plus doubled rest", (1.6496, 2), 1.4639),
    ("g4 rule 11, doubled literal, 5 distinct rest", (1.812, 2.768), 1.3599),
    ("g4 rule 11, two doubled literals, 5 distinct", (6, 2.6496, 2), 1.4267),
    ("g4 rule 11, doubled literal, 6+ distinct rest", (1.9744, 1), 1.6237),
    ("g4 rule 12, 8-literal exactly-4 clause", (1.4116, 1.4116), 1.6341),
    ("g4 rule 12, 9-literal exactly-4 clause", (3.1368, 1.4116, 2.4116), 1.6500),
    ("g4 rule 12, 10-literal with follow-ups", (10, 5.1216, 4.9744, 1.4704, 3.4116, 3.4116), 1.6545),
    ("g4 rule 12, 11-literal with follow-up", (11, 5.4752, 5.1368, 1.5292, 2), 1.6335),
    ("g4 rule 12, 12+-literal", (3.624, 1.588, 2), 1.6354),
]

bad = 0
for note, vec, expected in CANDIDATES:
    got = branching_factor(vec)
    diff = abs(got - expected)
    flag = "" if diff <= 1e-3 else "  <-- OFF"
    if flag:
        bad += 1
    print(f"{diff:.5f}  {expected:<7} {got:.5f}  {note}{flag}")
print(f"\n{len(CANDIDATES)} candidates, {bad} off by more than 1e-3")
