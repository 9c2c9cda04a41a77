#include "seqpipe/fixtures.hpp"

namespace seqpipe {

// Expected data is transcribed from the printed displays. Each locus names
// the display the data was copied from.
const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"n3-N3-as-reversion",
       "triangle(gfrev(1/(1+(r+1)*x+r*x^2)),7)",
       Expect::Triangle,
       "1; 1, 1; 1, 3, 1; 1, 6, 6, 1; 1, 10, 20, 10, 1; 1, 15, 50, 50, 15, 1; 1, 21, 105, 175, 105, 21, 1",
       "Introduction: N3 as the reversion of 1/(1+(r+1)x+rx^2)"},
      {"n3-N3-preimage",
       "triangle(1/(1+(r+1)*x+r*x^2),7)",
       Expect::Triangle,
       "1; -1, -1; 1, 1, 1; -1, -1, -1, -1; 1, 1, 1, 1, 1; -1, -1, -1, -1, -1, -1; 1, 1, 1, 1, 1, 1, 1",
       "Introduction: signed triangle whose reversion is N3"},
      {"narayana-N1-gf",
       "triangle(gfrev((1-r*x)/(1-(r-1)*x)),7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 3, 1, 0; 1, 6, 6, 1, 0; 1, 10, 20, 10, 1, 0; 1, 15, 50, 50, 15, 1, 0",
       "Narayana N1 display, gf from the reversion table"},
      {"narayana-N1-deleham",
       "deleham([1,0,1,0,1,0,1],[0,1,0,1,0,1,0],7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 3, 1, 0; 1, 6, 6, 1, 0; 1, 10, 20, 10, 1, 0; 1, 15, 50, 50, 15, 1, 0",
       "Narayana N1 display, Deleham form"},
      {"narayana-N1-jfrac",
       "triangle(jfrac([1,r+1,r+1,r+1,r+1,r+1,r+1],[r,r,r,r,r,r]),7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 3, 1, 0; 1, 6, 6, 1, 0; 1, 10, 20, 10, 1, 0; 1, 15, 50, 50, 15, 1, 0",
       "Narayana N1 display, Jacobi fraction"},
      {"narayana-N1-sfrac",
       "triangle(sfrac([1,r,1,r,1,r,1,r,1,r,1,r,1,r]),7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 3, 1, 0; 1, 6, 6, 1, 0; 1, 10, 20, 10, 1, 0; 1, 15, 50, 50, 15, 1, 0",
       "Narayana N1 display, Stieltjes fraction"},
      {"narayana-N1-oracle",
       "oracle(N1,7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 3, 1, 0; 1, 6, 6, 1, 0; 1, 10, 20, 10, 1, 0; 1, 15, 50, 50, 15, 1, 0",
       "Narayana N1 display, closed form"},
      {"narayana-N2-gf",
       "triangle(gfrev((1-x)/(1+(r-1)*x)),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 1; 0, 1, 6, 6, 1; 0, 1, 10, 20, 10, 1; 0, 1, 15, 50, 50, 15, 1",
       "Narayana N2 display, gf from the reversion table"},
      {"narayana-N2-deleham",
       "deleham([0,1,0,1,0,1,0],[1,0,1,0,1,0,1],7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 1; 0, 1, 6, 6, 1; 0, 1, 10, 20, 10, 1; 0, 1, 15, 50, 50, 15, 1",
       "Narayana N2 display, Deleham form"},
      {"narayana-N2-jfrac",
       "triangle(jfrac([r,r+1,r+1,r+1,r+1,r+1,r+1],[r,r,r,r,r,r]),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 1; 0, 1, 6, 6, 1; 0, 1, 10, 20, 10, 1; 0, 1, 15, 50, 50, 15, 1",
       "Narayana N2 display, Jacobi fraction"},
      {"narayana-N2-sfrac",
       "triangle(sfrac([r,1,r,1,r,1,r,1,r,1,r,1,r,1]),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 1; 0, 1, 6, 6, 1; 0, 1, 10, 20, 10, 1; 0, 1, 15, 50, 50, 15, 1",
       "Narayana N2 display, Stieltjes fraction"},
      {"narayana-N2-oracle",
       "oracle(N2,7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 1; 0, 1, 6, 6, 1; 0, 1, 10, 20, 10, 1; 0, 1, 15, 50, 50, 15, 1",
       "Narayana N2 display, closed form"},
      {"narayana-N3-jfrac",
       "triangle(jfrac([r+1,r+1,r+1,r+1,r+1,r+1,r+1],[r,r,r,r,r,r]),7)",
       Expect::Triangle,
       "1; 1, 1; 1, 3, 1; 1, 6, 6, 1; 1, 10, 20, 10, 1; 1, 15, 50, 50, 15, 1; 1, 21, 105, 175, 105, 21, 1",
       "Narayana N3 display, Jacobi fraction"},
      {"narayana-N3-deleham1",
       "deleham1([0,1,0,1,0,1,0],[1,0,1,0,1,0,1],7)",
       Expect::Triangle,
       "1; 1, 1; 1, 3, 1; 1, 6, 6, 1; 1, 10, 20, 10, 1; 1, 15, 50, 50, 15, 1; 1, 21, 105, 175, 105, 21, 1",
       "Narayana N3 display, Delta^(1) form"},
      {"narayana-N3-oracle",
       "oracle(N3,7)",
       Expect::Triangle,
       "1; 1, 1; 1, 3, 1; 1, 6, 6, 1; 1, 10, 20, 10, 1; 1, 15, 50, 50, 15, 1; 1, 21, 105, 175, 105, 21, 1",
       "Narayana N3 display, closed form"},
      {"euler-E2-from-N1",
       "triangle(-partialP((1-r*x)/(1-(r-1)*x)),7,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 4, 1; 0, 1, 11, 11, 1; 0, 1, 26, 66, 26, 1; 0, 1, 57, 302, 302, 57, 1",
       "Eulerian E2 display reached from N1"},
      {"euler-E2-deleham",
       "deleham([0,1,0,2,0,3,0],[1,0,2,0,3,0,4],7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 4, 1; 0, 1, 11, 11, 1; 0, 1, 26, 66, 26, 1; 0, 1, 57, 302, 302, 57, 1",
       "Eulerian E2 display, Deleham form"},
      {"euler-E2-jfrac",
       "triangle(jfrac(tinv(r,r+1,r,7)),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 4, 1; 0, 1, 11, 11, 1; 0, 1, 26, 66, 26, 1; 0, 1, 57, 302, 302, 57, 1",
       "Eulerian E2 display, Jacobi fraction J(r,2r+1,3r+2,..; r,4r,9r,..)"},
      {"euler-E2-sfrac",
       "triangle(sfrac([r,1,2*r,2,3*r,3,4*r,4,5*r,5,6*r,6,7*r,7]),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 4, 1; 0, 1, 11, 11, 1; 0, 1, 26, 66, 26, 1; 0, 1, 57, 302, 302, 57, 1",
       "Eulerian E2 display, Stieltjes fraction"},
      {"euler-E2-oracle",
       "oracle(E2,7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 4, 1; 0, 1, 11, 11, 1; 0, 1, 26, 66, 26, 1; 0, 1, 57, 302, 302, 57, 1",
       "Eulerian E2 display, closed form"},
      {"euler-E1-from-N2",
       "triangle(-partialP((1-x)/(1-(1-r)*x))/r,7,egf)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "Eulerian E1 display reached from N2 (sign fixed, see README)"},
      {"euler-E1-deleham",
       "deleham([1,0,2,0,3,0,4],[0,1,0,2,0,3,0],7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "Eulerian E1 display, Deleham form"},
      {"euler-E1-jfrac",
       "triangle(jfrac(tinv(1,r+1,r,7)),7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "Eulerian E1 display, Jacobi fraction J(1,r+2,2r+3,..; r,4r,9r,..)"},
      {"euler-E1-sfrac",
       "triangle(sfrac([1,r,2,2*r,3,3*r,4,4*r,5,5*r,6,6*r,7,7*r]),7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "Eulerian E1 display, Stieltjes fraction"},
      {"euler-E1-oracle",
       "oracle(E1,7)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "Eulerian E1 display, closed form"},
      {"euler-E1-from-N3",
       "triangle(-(1+partialP(1/(1+(r+1)*x+r*x^2)))/r,7,egf)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "Eulerian E1 display reached from N3 (sign fixed, see README)"},
      {"euler-E3-from-N3",
       "triangle(-diff(partialP(1/(1+(r+1)*x+r*x^2)))/r,7,egf)",
       Expect::Triangle,
       "1; 1, 1; 1, 4, 1; 1, 11, 11, 1; 1, 26, 66, 26, 1; 1, 57, 302, 302, 57, 1; 1, 120, 1191, 2416, 1191, 120, 1",
       "Eulerian E3 display, derivative route from N3"},
      {"euler-E3-deleham1",
       "deleham1([0,1,0,2,0,3,0],[1,0,2,0,3,0,4],7)",
       Expect::Triangle,
       "1; 1, 1; 1, 4, 1; 1, 11, 11, 1; 1, 26, 66, 26, 1; 1, 57, 302, 302, 57, 1; 1, 120, 1191, 2416, 1191, 120, 1",
       "Eulerian E3 display, Delta^(1) form"},
      {"euler-E3-jfrac",
       "triangle(jfrac([1*(r+1),2*(r+1),3*(r+1),4*(r+1),5*(r+1),6*(r+1),7*(r+1)],[2*r,6*r,12*r,20*r,30*r,42*r]),7)",
       Expect::Triangle,
       "1; 1, 1; 1, 4, 1; 1, 11, 11, 1; 1, 26, 66, 26, 1; 1, 57, 302, 302, 57, 1; 1, 120, 1191, 2416, 1191, 120, 1",
       "Eulerian E3 display, Jacobi fraction"},
      {"euler-E3-oracle",
       "oracle(E3,7)",
       Expect::Triangle,
       "1; 1, 1; 1, 4, 1; 1, 11, 11, 1; 1, 26, 66, 26, 1; 1, 57, 302, 302, 57, 1; 1, 120, 1191, 2416, 1191, 120, 1",
       "Eulerian E3 display, closed form"},
      {"narayana-N1-cfrac",
       "tojfrac(gfrev((1-r*x)/(1-(r-1)*x)),9)",
       Expect::JFrac,
       "1, r+1, r+1, r+1 | r, r, r, r",
       "continued fraction table, N1 Jacobi column"},
      {"narayana-N1-sfrac-table",
       "tosfrac(gfrev((1-r*x)/(1-(r-1)*x)),9)",
       Expect::SFrac,
       "1, r, 1, r, 1, r, 1, r",
       "continued fraction table, N1 Stieltjes column"},
      {"narayana-N2-cfrac",
       "tojfrac(gfrev((1-x)/(1+(r-1)*x)),9)",
       Expect::JFrac,
       "r, r+1, r+1, r+1 | r, r, r, r",
       "continued fraction table, N2 Jacobi column"},
      {"narayana-N2-sfrac-table",
       "tosfrac(gfrev((1-x)/(1+(r-1)*x)),9)",
       Expect::SFrac,
       "r, 1, r, 1, r, 1, r, 1",
       "continued fraction table, N2 Stieltjes column"},
      {"narayana-N3-cfrac",
       "tojfrac(gfrev(1/(1+(r+1)*x+r*x^2)),9)",
       Expect::JFrac,
       "r+1, r+1, r+1, r+1 | r, r, r, r",
       "continued fraction table, N3 Jacobi column"},
      {"euler-E1-cfrac",
       "tojfrac(sumudu(-partialP((1-x)/(1-(1-r)*x))/r),9)",
       Expect::JFrac,
       "1, r+2, 2*r+3, 3*r+4 | r, 4*r, 9*r, 16*r",
       "Eulerian continued fraction table, E1 Jacobi column"},
      {"euler-E1-sfrac-table",
       "tosfrac(sumudu(-partialP((1-x)/(1-(1-r)*x))/r),9)",
       Expect::SFrac,
       "1, r, 2, 2*r, 3, 3*r, 4, 4*r",
       "Eulerian continued fraction table, E1 Stieltjes column"},
      {"euler-E2-cfrac",
       "tojfrac(sumudu(-partialP((1-r*x)/(1-(r-1)*x))),9)",
       Expect::JFrac,
       "r, 2*r+1, 3*r+2, 4*r+3 | r, 4*r, 9*r, 16*r",
       "Eulerian continued fraction table, E2 Jacobi column"},
      {"euler-E2-sfrac-table",
       "tosfrac(sumudu(-partialP((1-r*x)/(1-(r-1)*x))),9)",
       Expect::SFrac,
       "r, 1, 2*r, 2, 3*r, 3, 4*r, 4",
       "Eulerian continued fraction table, E2 Stieltjes column"},
      {"euler-E3-cfrac",
       "tojfrac(sumudu(-diff(partialP(1/(1+(r+1)*x+r*x^2)))/r),9)",
       Expect::JFrac,
       "r+1, 2*(r+1), 3*(r+1), 4*(r+1) | 2*r, 6*r, 12*r, 20*r",
       "Eulerian continued fraction table, E3 Jacobi column"},
      {"stellahedra-A046802",
       "triangle(jfrac(tinv(r+1,r+1,r,7)),7)",
       Expect::Triangle,
       "1; 1, 1; 1, 3, 1; 1, 7, 7, 1; 1, 15, 33, 15, 1; 1, 31, 131, 131, 31, 1; 1, 63, 473, 883, 473, 63, 1",
       "A046802 display, T-preimage of N3"},
      {"stellahedra-A248727",
       "matmul(triangle(jfrac(tinv(r+1,r+1,r,7)),7),Bmat(7))",
       Expect::Triangle,
       "1; 2, 1; 5, 5, 1; 16, 24, 10, 1; 65, 130, 84, 19, 1; 326, 815, 720, 265, 36, 1; 1957, 5871, 6605, 3425, 803, 69, 1",
       "A248727 display, A046802 times B"},
      {"fubini-pipeline",
       "sumudu(P(1/(1-x^2)))",
       Expect::Sequence,
       "1, 1, 3, 13, 75, 541, 4683, 47293, 545835",
       "first pipeline proposition, Fubini numbers A000670"},
      {"nonelementary",
       "sumudu(P(1/(1-2*x^2)))",
       Expect::Sequence,
       "1, 2, 12, 112, 1440, 23648, 473088, 11164288, 303648000",
       "pipeline on 1/(1-2x^2), numerical expansion"},
      {"fibonacci",
       "invert(1/(1-x^2),1)",
       Expect::Sequence,
       "1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89",
       "INVERT(-1) of 1/(1-x^2), Fibonacci A000045"},
      {"signed-fibonacci",
       "invert(1/(1-x^2),-1)",
       Expect::Sequence,
       "1, -1, 2, -3, 5, -8, 13, -21, 34, -55, 89",
       "INVERT(1) of 1/(1-x^2), signed Fibonacci"},
      {"fubini-jfrac",
       "tojfrac(sumudu(P(1/(1-x^2))),9)",
       Expect::JFrac,
       "1, 4, 7, 10 | 2, 8, 18, 32",
       "Fubini Jacobi fraction J(1,4,7,10,..; 2,8,18,32,..)"},
      {"fubini-sfrac",
       "tosfrac(sumudu(P(1/(1-x^2))),9)",
       Expect::SFrac,
       "1, 2, 2, 4, 3, 6, 4, 8",
       "Fubini Stieltjes fraction S(1,2,2,4,3,6,4,8,..)"},
      {"sech-image",
       "sumudu(P((1+x^2)/(1-x^2)))",
       Expect::Sequence,
       "1, 2, 12, 110, 1380, 22022, 426972, 9747950, 256176660",
       "pipeline on (1+x^2)/(1-x^2)"},
      {"sech-sech",
       "sumudu(2/(1+exp(2*x)))",
       Expect::Sequence,
       "1, -1, 0, 2, 0, -16, 0, 272, 0, -7936, 0",
       "e^(-z) sech(z) expansion"},
      {"sech-sech-jfrac",
       "tojfrac(sumudu(2/(1+exp(2*x))),7)",
       Expect::JFrac,
       "-1, -1, -1 | -1, -4, -9",
       "e^(-z) sech(z) Jacobi fraction (fourth printed lam is off, see README)"},
      {"sech-integral",
       "sumudu(integ(2/(1+exp(2*x))))",
       Expect::Sequence,
       "0, 1, -1, 0, 2, 0, -16, 0, 272, 0, -7936, 0",
       "reverse pipeline start, integral of e^(-z) sech(z)"},
      {"sech-shifted-fubini",
       "sumudu(revert(integ(2/(1+exp(2*x)))))",
       Expect::Sequence,
       "0, 1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261",
       "reverse pipeline, right-shifted Fubini numbers"},
      {"sech-logd-sequence",
       "sumudu(-diff(1/(2-exp(x))))",
       Expect::Sequence,
       "-1, -3, -13, -75, -541, -4683, -47293, -545835, -7087261",
       "reverse pipeline, logarithmic derivative sequence"},
      {"sech-preimage",
       "sumudu(exp(1-diff(revert(integ(2/(1+exp(2*x)))))))",
       Expect::Sequence,
       "1, -1, -2, -5, -13, -12, 379, 6907, 99112, 1378941, 19514571, 284384318",
       "reverse pipeline pre-image sequence (chain as printed, see README)"},
      {"sech-once-shifted-fubini",
       "sumudu(exp(x)/(2-exp(x))^2)",
       Expect::Sequence,
       "1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261",
       "once-shifted Fubini numbers"},
      {"sech-once-shifted-fubini-jfrac",
       "tojfrac(sumudu(exp(x)/(2-exp(x))^2),9)",
       Expect::JFrac,
       "3, 6, 9, 12 | 4, 12, 24, 40",
       "once-shifted Fubini Jacobi fraction J(3,6,9,..; 4,12,24,40,..)"},
      {"reverse-roundtrip-cosh",
       "sumudu(reverseP(1/(2-exp(x))))",
       Expect::Sequence,
       "1, 0, 1, 0, 1, 0, 1, 0",
       "reverse pipeline formula applied to the Fubini egf returns 1/(1-x^2)"},
      {"family-triangle",
       "triangle((1+(r-1)*x)/((1-x)*(1+r*x)),8)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 1, -1, 0; 0, 1, -1, 1, 0; 0, 1, -1, 1, -1, 0; 0, 1, -1, 1, -1, 1, 0; 0, 1, -1, 1, -1, 1, -1",
       "coefficient array of (1+(r-1)x)/((1-x)(1+rx))"},
      {"family-times-B",
       "matmul(triangle((1+(r-1)*x)/((1-x)*(1+r*x)),8),Bmat(8))",
       Expect::Triangle,
       "1; 0, 0; 1, 1, 0; 0, -1, -1, 0; 1, 2, 2, 1, 0; 0, -2, -4, -3, -1, 0; 1, 3, 6, 7, 4, 1, 0; 0, -3, -9, -13, -11, -5, -1, 0",
       "family triangle times B"},
      {"family-B-gf",
       "triangle((1+r*x)/((1-x)*(1+(r+1)*x)),8)",
       Expect::Triangle,
       "1; 0, 0; 1, 1, 0; 0, -1, -1, 0; 1, 2, 2, 1, 0; 0, -2, -4, -3, -1, 0; 1, 3, 6, 7, 4, 1, 0; 0, -3, -9, -13, -11, -5, -1, 0",
       "bivariate expansion of (1+rx)/((1-x)(1+(r+1)x))"},
      {"family-partial-sums-of",
       "(1+(r-1)*x)/(1+r*x)",
       Expect::Sequence,
       "1, -1, r, -r^2, r^3, -r^4, r^5, -r^6, r^7, -r^8, r^9",
       "sequence whose partial sums give the family"},
      {"family-ibinom-seq",
       "ibinom((1+(r-1)*x)/((1-x)*(1+r*x)))",
       Expect::Sequence,
       "1, -1, r+1, -(r+1)^2, (r+1)^3, -(r+1)^4, (r+1)^5, -(r+1)^6",
       "inverse binomial transform of the family"},
      {"family-ibinom",
       "triangle(ibinom((1+(r-1)*x)/((1-x)*(1+r*x))),8)",
       Expect::Triangle,
       "1; -1, 0; 1, 1, 0; -1, -2, -1, 0; 1, 3, 3, 1, 0; -1, -4, -6, -4, -1, 0; 1, 5, 10, 10, 5, 1, 0; -1, -6, -15, -20, -15, -6, -1, 0",
       "coefficient array of the inverse binomial transform"},
      {"signed-narayana",
       "triangle(gfrev(ibinom((1+(r-1)*x)/((1-x)*(1+r*x)))),8)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -3, 1, 0; 1, -6, 6, -1, 0; 1, -10, 20, -10, 1, 0; 1, -15, 50, -50, 15, -1, 0; 1, -21, 105, -175, 105, -21, 1, 0",
       "reversion of the inverse binomial transform, signed Narayana triangle"},
      {"bell-production-matrix",
       "prodmat(1/(1+r*(1-exp(x))),(exp(x)-1)/(1+r*(1-exp(x))),6)",
       Expect::Matrix,
       "r, 1; r*(r+1), 3*r+1, 1; 0, 4*r*(r+1), 5*r+2, 1; 0, 0, 9*r*(r+1), 7*r+3, 1; 0, 0, 0, 16*r*(r+1), 9*r+4, 1; 0, 0, 0, 0, 25*r*(r+1), 11*r+5",
       "production matrix of [1/(1+r(1-e^z)), (e^z-1)/(1+r(1-e^z))]"},
      {"bell-recurrence",
       "recurrence(prodmat(1/(1+r*(1-exp(x))),(exp(x)-1)/(1+r*(1-exp(x))),6))",
       Expect::JFrac,
       "r, 3*r+1, 5*r+2, 7*r+3, 9*r+4, 11*r+5 | r*(r+1), 4*r*(r+1), 9*r*(r+1), 16*r*(r+1), 25*r*(r+1)",
       "three-term recurrence read off the production matrix"},
      {"gen-bell-jfrac",
       "tojfrac(sumudu(1/(1+r*(1-exp(x)))),10)",
       Expect::JFrac,
       "r, 3*r+1, 5*r+2 | r*(r+1), 4*r*(r+1), 9*r*(r+1)",
       "Jacobi fraction of 1/(r+1-re^z)"},
      {"gen-bell-sfrac",
       "tosfrac(sumudu(1/(1+r*(1-exp(x)))),7)",
       Expect::SFrac,
       "r, r+1, 2*r, 2*(r+1), 3*r, 3*(r+1)",
       "Stieltjes fraction of 1/(r+1-re^z)"},
      {"gen-bell-polys",
       "sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x))))",
       Expect::Sequence,
       "1, r, r*(2*r+1), r*(6*r^2+6*r+1), r*(24*r^3+36*r^2+14*r+1), r*(120*r^4+240*r^3+150*r^2+30*r+1)",
       "polynomial sequence of 1/(r+1-re^x)"},
      {"gen-bell-r1-A000670",
       "subs(sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x)))),1)",
       Expect::Sequence,
       "1, 1, 3, 13, 75, 541, 4683, 47293, 545835",
       "generalized ordered Bell numbers at r=1 (A000670)"},
      {"gen-bell-r2-A004123",
       "subs(sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x)))),2)",
       Expect::Sequence,
       "1, 2, 10, 74, 730, 9002, 133210",
       "generalized ordered Bell numbers at r=2 (A004123)"},
      {"gen-bell-r3-A032033",
       "subs(sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x)))),3)",
       Expect::Sequence,
       "1, 3, 3*(2*3+1), 3*(6*3^2+6*3+1), 3*(24*3^3+36*3^2+14*3+1), 3*(120*3^4+240*3^3+150*3^2+30*3+1)",
       "generalized ordered Bell numbers at r=3 (A032033)"},
      {"gen-bell-r4-A094417",
       "subs(sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x)))),4)",
       Expect::Sequence,
       "1, 4, 4*(2*4+1), 4*(6*4^2+6*4+1), 4*(24*4^3+36*4^2+14*4+1), 4*(120*4^4+240*4^3+150*4^2+30*4+1)",
       "generalized ordered Bell numbers at r=4 (A094417)"},
      {"gen-bell-r5-A094418",
       "subs(sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x)))),5)",
       Expect::Sequence,
       "1, 5, 5*(2*5+1), 5*(6*5^2+6*5+1), 5*(24*5^3+36*5^2+14*5+1), 5*(120*5^4+240*5^3+150*5^2+30*5+1)",
       "generalized ordered Bell numbers at r=5 (A094418)"},
      {"A019538-pipeline",
       "triangle(P((1+(r-1)*x)/((1-x)*(1+r*x))),7,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720",
       "A019538 display, pipeline image of the family"},
      {"A019538-deleham",
       "deleham([0,1,0,2,0,3,0],[1,1,2,2,3,3,4],7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720",
       "A019538 Deleham form"},
      {"A019538-oracle",
       "oracle(A019538,7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720",
       "A019538 closed form k! S(n,k)"},
      {"A019538-arrow-source",
       "triangle((1+(r-1)*x)/((1-x)*(1+r*x)),7)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 1, -1, 0; 0, 1, -1, 1, 0; 0, 1, -1, 1, -1, 0; 0, 1, -1, 1, -1, 1, 0",
       "source triangle of the pipeline arrow display"},
      {"A086810-jfrac",
       "triangle(jfrac([r,2*r+1,2*r+1,2*r+1,2*r+1,2*r+1,2*r+1],[r*(r+1),r*(r+1),r*(r+1),r*(r+1),r*(r+1),r*(r+1)]),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 5, 5; 0, 1, 9, 21, 14; 0, 1, 14, 56, 84, 42; 0, 1, 20, 120, 300, 330, 132",
       "A086810 display, Jacobi fraction"},
      {"A086810-deleham",
       "deleham([0,1,0,1,0,1,0],[1,1,1,1,1,1,1],7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 5, 5; 0, 1, 9, 21, 14; 0, 1, 14, 56, 84, 42; 0, 1, 20, 120, 300, 330, 132",
       "A086810 Deleham form"},
      {"A086810-oracle",
       "oracle(A086810,7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 5, 5; 0, 1, 9, 21, 14; 0, 1, 14, 56, 84, 42; 0, 1, 20, 120, 300, 330, 132",
       "A086810 closed form"},
      {"A086810-T-of-P",
       "triangle(jfrac(tfwd(tojfrac(sumudu(P((1+(r-1)*x)/((1-x)*(1+r*x)))),12))),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 5, 5; 0, 1, 9, 21, 14; 0, 1, 14, 56, 84, 42; 0, 1, 20, 120, 300, 330, 132",
       "T composed with the pipeline, arrow display"},
      {"B-variant-reversion",
       "triangle(gfrev((1+r*x)/((1-x)*(1+(r+1)*x))),8)",
       Expect::Triangle,
       "1; 0, 0; -1, -1; 0, 1, 1; 2, 4, 1, -1; 0, -5, -10, -4, 1; -5, -15, -6, 13, 8, -1; 0, 21, 63, 49, -7, -13, 1",
       "reversion of the B-variant triangle (expansion of the stated gf; printed rows disagree, see README)"},
      {"B-variant-reversion-closed",
       "triangle(1/(1-r*x)*2/(1+powq(1+4*x*(r+(r+1)*x)/(1-r*x)^2,1/2)),8)",
       Expect::Triangle,
       "1; 0, 0; -1, -1; 0, 1, 1; 2, 4, 1, -1; 0, -5, -10, -4, 1; -5, -15, -6, 13, 8, -1; 0, 21, 63, 49, -7, -13, 1",
       "reversion of the B-variant from its Catalan closed form"},
      {"B-variant-reversion-jfrac",
       "triangle(jfrac([0,-r,-r,-r,-r,-r,-r,-r],[-(r+1),-(r+1),-(r+1),-(r+1),-(r+1),-(r+1),-(r+1)]),8)",
       Expect::Triangle,
       "1; 0, 0; -1, -1; 0, 1, 1; 2, 4, 1, -1; 0, -5, -10, -4, 1; -5, -15, -6, 13, 8, -1; 0, 21, 63, 49, -7, -13, 1",
       "reversion of the B-variant, Jacobi fraction"},
      {"T-preimage-chain",
       "triangle(jfrac(tinv(0,-r,-(r+1),8)),8)",
       Expect::Triangle,
       "1; 0, 0; -1, -1, 0; 0, 1, 1, 0; 5, 10, 4, -1, 0; 0, -18, -36, -17, 1, 0; -61, -183, -136, 33, 46, -1, 0; 0, 479, 1437, 1329, 263, -107, 1, 0",
       "T-preimage J(0,-r,-2r,..; -(r+1),-4(r+1),..) (sign of fourth lam fixed, see README)"},
      {"T-preimage-chain-egf",
       "triangle((r+2)*exp((r+1)*x)/(1+(r+1)*exp((r+2)*x)),8,egf)",
       Expect::Triangle,
       "1; 0, 0; -1, -1, 0; 0, 1, 1, 0; 5, 10, 4, -1, 0; 0, -18, -36, -17, 1, 0; -61, -183, -136, 33, 46, -1, 0; 0, 479, 1437, 1329, 263, -107, 1, 0",
       "same triangle from its exponential gf"},
      {"signed-A271697",
       "matmul(triangle(jfrac(tinv(0,-r,-(r+1),8)),8),inv(Bmat(8)))",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -1, 1, 0; 0, -1, 7, -1, 0; 0, -1, 21, -21, 1, 0; 0, -1, 51, -161, 51, -1, 0; 0, -1, 113, -813, 813, -113, 1, 0",
       "times B^-1, signed A271697"},
      {"signed-A271697-jfrac",
       "triangle(jfrac(tinv(0,1-r,-r,8)),8)",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -1, 1, 0; 0, -1, 7, -1, 0; 0, -1, 21, -21, 1, 0; 0, -1, 51, -161, 51, -1, 0; 0, -1, 113, -813, 813, -113, 1, 0",
       "signed A271697 Jacobi fraction"},
      {"signed-A271697-egf",
       "triangle((r+1)*exp(r*x)/(1+r*exp((r+1)*x)),8,egf)",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -1, 1, 0; 0, -1, 7, -1, 0; 0, -1, 21, -21, 1, 0; 0, -1, 51, -161, 51, -1, 0; 0, -1, 113, -813, 813, -113, 1, 0",
       "signed A271697 exponential gf"},
      {"signed-euler-8",
       "matmul(Bmat(8),triangle(jfrac(tinv(0,1-r,-r,8)),8))",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -4, 1, 0; 1, -11, 11, -1, 0; 1, -26, 66, -26, 1, 0; 1, -57, 302, -302, 57, -1, 0; 1, -120, 1191, -2416, 1191, -120, 1, 0",
       "B times signed A271697, signed Eulerian triangle"},
      {"signed-euler-8-jfrac",
       "triangle(jfrac(tinv(1,1-r,-r,8)),8)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -4, 1, 0; 1, -11, 11, -1, 0; 1, -26, 66, -26, 1, 0; 1, -57, 302, -302, 57, -1, 0; 1, -120, 1191, -2416, 1191, -120, 1, 0",
       "signed Eulerian Jacobi fraction J(1,-(r-2),-(2r-3),..; -r,-4r,..)"},
      {"signed-narayana-8",
       "triangle(jfrac([1,1-r,1-r,1-r,1-r,1-r,1-r,1-r],[-r,-r,-r,-r,-r,-r,-r]),8)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -3, 1, 0; 1, -6, 6, -1, 0; 1, -10, 20, -10, 1, 0; 1, -15, 50, -50, 15, -1, 0; 1, -21, 105, -175, 105, -21, 1, 0",
       "signed Narayana, Jacobi fraction J(1,1-r,..; -r,..)"},
      {"signed-narayana-8-T",
       "triangle(jfrac(tfwd(tinv(1,1-r,-r,8))),8)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -3, 1, 0; 1, -6, 6, -1, 0; 1, -10, 20, -10, 1, 0; 1, -15, 50, -50, 15, -1, 0; 1, -21, 105, -175, 105, -21, 1, 0",
       "signed Narayana as the T image of the signed Eulerian fraction"},
      {"variant-euler",
       "triangle(partialP((1+r*x)/(1+(r+1)*x)),8,egf)",
       Expect::Triangle,
       "-1; 0, 1; 0, 1, -1; 0, 1, -4, 1; 0, 1, -11, 11, -1; 0, 1, -26, 66, -26, 1; 0, 1, -57, 302, -302, 57, -1; 0, 1, -120, 1191, -2416, 1191, -120, 1",
       "logarithmic derivative, variant Eulerian triangle"},
      {"A019538-8",
       "triangle(diff(revert(integ(-partialP((1+r*x)/(1+(r+1)*x))))),8,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720; 0, 1, 126, 1806, 8400, 16800, 15120, 5040",
       "z'(x) = 1/(1-r(e^x-1)), A019538 to 8 rows"},
      {"A019538-8-closed",
       "triangle(1/(1-r*(exp(x)-1)),8,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720; 0, 1, 126, 1806, 8400, 16800, 15120, 5040",
       "A019538 to 8 rows from 1/(1-r(e^x-1))"},
      {"signed-A130850",
       "triangle(-partialP((1+(r-1)*x)/(1+r*x)),7,egf)",
       Expect::Triangle,
       "1; 1, -1; 2, -3, 1; 6, -12, 7, -1; 24, -60, 50, -15, 1; 120, -360, 390, -180, 31, -1; 720, -2520, 3360, -2100, 602, -63, 1",
       "signed A130850 display"},
      {"signed-A130850-deleham",
       "deleham([1,1,2,2,3,3,4],[-1,0,-2,0,-3,0,-4],7)",
       Expect::Triangle,
       "1; 1, -1; 2, -3, 1; 6, -12, 7, -1; 24, -60, 50, -15, 1; 120, -360, 390, -180, 31, -1; 720, -2520, 3360, -2100, 602, -63, 1",
       "signed A130850, Deleham form (s signs fixed, see README)"},
      {"signed-A028246",
       "triangle(diff(revert(integ(-partialP((1+(r-1)*x)/(1+r*x))))),7,egf)",
       Expect::Triangle,
       "1; -1, 1; 1, -3, 2; -1, 7, -12, 6; 1, -15, 50, -60, 24; -1, 31, -180, 390, -360, 120; 1, -63, 602, -2100, 3360, -2520, 720",
       "signed A028246 display"},
      {"signed-A028246-closed",
       "triangle(1/(r-(r-1)*exp(x)),7,egf)",
       Expect::Triangle,
       "1; -1, 1; 1, -3, 2; -1, 7, -12, 6; 1, -15, 50, -60, 24; -1, 31, -180, 390, -360, 120; 1, -63, 602, -2100, 3360, -2520, 720",
       "signed A028246 from 1/(r-(r-1)e^x)"},
      {"signed-A028246-deleham",
       "deleham([-1,0,-2,0,-3,0,-4],[1,1,2,2,3,3,4],7)",
       Expect::Triangle,
       "1; -1, 1; 1, -3, 2; -1, 7, -12, 6; 1, -15, 50, -60, 24; -1, 31, -180, 390, -360, 120; 1, -63, 602, -2100, 3360, -2520, 720",
       "signed A028246, Deleham form (r signs fixed, see README)"},
      {"signed-A028246-times-B",
       "matmul(triangle(1/(r-(r-1)*exp(x)),7,egf),Bmat(7))",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720",
       "signed A028246 times B gives A019538"},
      {"one-minus-x-g",
       "triangle((1+(r-1)*x)/(1+r*x),7)",
       Expect::Triangle,
       "1; -1, 0; 0, 1, 0; 0, 0, -1, 0; 0, 0, 0, 1, 0; 0, 0, 0, 0, -1, 0; 0, 0, 0, 0, 0, 1, 0",
       "triangle of (1-x)g(x)"},
      {"A126216-signed",
       "triangle(gfrev((1+(r-1)*x)/(1+r*x)),6)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 5, -5, 1, 0; 14, -21, 9, -1, 0; 42, -84, 56, -14, 1, 0",
       "reversion of (1+(r-1)x)/(1+rx), signed A126216"},
      {"A126216-signed-jfrac",
       "triangle(jfrac([1,2-r,2-r,2-r,2-r,2-r],[1-r,1-r,1-r,1-r,1-r]),6)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 5, -5, 1, 0; 14, -21, 9, -1, 0; 42, -84, 56, -14, 1, 0",
       "signed A126216, Jacobi fraction"},
      {"A126216-signed-deleham",
       "deleham([1,1,1,1,1,1],[0,-1,0,-1,0,-1],6)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 5, -5, 1, 0; 14, -21, 9, -1, 0; 42, -84, 56, -14, 1, 0",
       "signed A126216, Deleham form (corrected, see README)"},
      {"A090582-signed",
       "triangle(jfrac(tinv(1,2-r,1-r,7)),7)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 6, -6, 1, 0; 24, -36, 14, -1, 0; 120, -240, 150, -30, 1, 0; 720, -1800, 1560, -540, 62, -1, 0",
       "signed A090582, T-preimage J(1,3-r,5-2r,..; 1-r,4(1-r),..)"},
      {"A090582-signed-deleham",
       "deleham([1,1,2,2,3,3,4],[0,-1,0,-2,0,-3,0],7)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 6, -6, 1, 0; 24, -36, 14, -1, 0; 120, -240, 150, -30, 1, 0; 720, -1800, 1560, -540, 62, -1, 0",
       "signed A090582, Deleham form (s signs fixed, see README)"},
      {"A090582-signed-egf",
       "triangle(r/(exp(-r*x)+r-1),7,egf)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 6, -6, 1, 0; 24, -36, 14, -1, 0; 120, -240, 150, -30, 1, 0; 720, -1800, 1560, -540, 62, -1, 0",
       "signed A090582 exponential gf"},
      {"A090582-signed-oracle",
       "oracle(A090582signed,7)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 6, -6, 1, 0; 24, -36, 14, -1, 0; 120, -240, 150, -30, 1, 0; 720, -1800, 1560, -540, 62, -1, 0",
       "signed A090582 closed form"},
      {"one-minus-x-g-times-B",
       "matmul(triangle((1+(r-1)*x)/(1+r*x),7),Bmat(7))",
       Expect::Triangle,
       "1; -1, 0; 1, 1, 0; -1, -2, -1, 0; 1, 3, 3, 1, 0; -1, -4, -6, -4, -1, 0; 1, 5, 10, 10, 5, 1, 0",
       "(1-x)g triangle times B"},
      {"one-minus-x-g-B-gf",
       "triangle((1+r*x)/(1+(r+1)*x),7)",
       Expect::Triangle,
       "1; -1, 0; 1, 1, 0; -1, -2, -1, 0; 1, 3, 3, 1, 0; -1, -4, -6, -4, -1, 0; 1, 5, 10, 10, 5, 1, 0",
       "triangle of (1+rx)/(1+(r+1)x)"},
      {"signed-narayana-7",
       "triangle(gfrev((1+r*x)/(1+(r+1)*x)),7)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -3, 1, 0; 1, -6, 6, -1, 0; 1, -10, 20, -10, 1, 0; 1, -15, 50, -50, 15, -1, 0",
       "reversion arrow display, signed Narayana"},
      {"A126216-signed-7",
       "triangle(gfrev((1+(r-1)*x)/(1+r*x)),7)",
       Expect::Triangle,
       "1; 1, 0; 2, -1, 0; 5, -5, 1, 0; 14, -21, 9, -1, 0; 42, -84, 56, -14, 1, 0; 132, -330, 300, -120, 20, -1, 0",
       "signed A126216 to 7 rows"},
      {"A126216-times-B",
       "matmul(triangle(gfrev((1+(r-1)*x)/(1+r*x)),7),Bmat(7))",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -3, 1, 0; 1, -6, 6, -1, 0; 1, -10, 20, -10, 1, 0; 1, -15, 50, -50, 15, -1, 0",
       "signed A126216 times B, signed Narayana"},
      {"signed-euler-7",
       "triangle(jfrac(tinv(1,1-r,-r,7)),7)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -4, 1, 0; 1, -11, 11, -1, 0; 1, -26, 66, -26, 1, 0; 1, -57, 302, -302, 57, -1, 0",
       "signed Eulerian J(1,2-r,3-2r,..; -r,-4r,..)"},
      {"signed-euler-7-product",
       "matmul(triangle(jfrac(tinv(1,2-r,1-r,7)),7),Bmat(7))",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -4, 1, 0; 1, -11, 11, -1, 0; 1, -26, 66, -26, 1, 0; 1, -57, 302, -302, 57, -1, 0",
       "signed A090582 times B"},
      {"signed-euler-7-egf",
       "triangle((r+1)/(exp(-(r+1)*x)+r),7,egf)",
       Expect::Triangle,
       "1; 1, 0; 1, -1, 0; 1, -4, 1, 0; 1, -11, 11, -1, 0; 1, -26, 66, -26, 1, 0; 1, -57, 302, -302, 57, -1, 0",
       "signed Eulerian exponential gf (r+1)/(e^(-(r+1)x)+r)"},
      {"A019538-reversed",
       "reverse(triangle(P((1+(r-1)*x)/((1-x)*(1+r*x))),7,egf))",
       Expect::Triangle,
       "1; 1, 0; 2, 1, 0; 6, 6, 1, 0; 24, 36, 14, 1, 0; 120, 240, 150, 30, 1, 0; 720, 1800, 1560, 540, 62, 1, 0",
       "reversal of A019538"},
      {"A019538-reversed-ibinom",
       "matmul(reverse(triangle(P((1+(r-1)*x)/((1-x)*(1+r*x))),7,egf)),inv(Bmat(7)))",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 4, 1, 0; 1, 11, 11, 1, 0; 1, 26, 66, 26, 1, 0; 1, 57, 302, 302, 57, 1, 0",
       "reversed A019538 times B^-1 gives E1"},
      {"A086810-reversed",
       "reverse(triangle(jfrac([r,2*r+1,2*r+1,2*r+1,2*r+1,2*r+1,2*r+1],[r*(r+1),r*(r+1),r*(r+1),r*(r+1),r*(r+1),r*(r+1)]),7))",
       Expect::Triangle,
       "1; 1, 0; 2, 1, 0; 5, 5, 1, 0; 14, 21, 9, 1, 0; 42, 84, 56, 14, 1, 0; 132, 330, 300, 120, 20, 1, 0",
       "reversal of A086810"},
      {"A086810-reversed-ibinom",
       "matmul(reverse(triangle(jfrac([r,2*r+1,2*r+1,2*r+1,2*r+1,2*r+1,2*r+1],[r*(r+1),r*(r+1),r*(r+1),r*(r+1),r*(r+1),r*(r+1)]),7)),inv(Bmat(7)))",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 1, 3, 1, 0; 1, 6, 6, 1, 0; 1, 10, 20, 10, 1, 0; 1, 15, 50, 50, 15, 1, 0",
       "reversed A086810 times B^-1 gives N1"},
      {"fine-family-start",
       "triangle((1-(r+1)*x)/((1-x)*(1-r*x)),7)",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -1, -1, 0; 0, -1, -1, -1, 0; 0, -1, -1, -1, -1, 0; 0, -1, -1, -1, -1, -1, 0",
       "fine family starting triangle"},
      {"fine-family-A100754",
       "triangle(gfrev((1-(r+1)*x)/((1-x)*(1-r*x))),7)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 1, 1, 0; 0, 1, 4, 1, 0; 0, 1, 8, 8, 1, 0; 0, 1, 13, 29, 13, 1, 0",
       "fine family reversion, A100754 variant"},
      {"fine-family-A100754-jfrac",
       "triangle(jfrac([0,r+1,r+1,r+1,r+1,r+1,r+1],[r,r,r,r,r,r]),7)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 1, 1, 0; 0, 1, 4, 1, 0; 0, 1, 8, 8, 1, 0; 0, 1, 13, 29, 13, 1, 0",
       "A100754 variant, Jacobi fraction J(0,r+1,..; r,..)"},
      {"fine-family-fine-row-sums",
       "rowsums(triangle(gfrev((1-(r+1)*x)/((1-x)*(1-r*x))),7))",
       Expect::Sequence,
       "1, 0, 1, 2, 6, 18, 57",
       "row sums of the printed A100754 variant, Fine numbers A000957"},
      {"fine-family-E2",
       "triangle(1-partialP((1-(r+1)*x)/((1-x)*(1-r*x))),7,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 4, 1; 0, 1, 11, 11, 1; 0, 1, 26, 66, 26, 1; 0, 1, 57, 302, 302, 57, 1",
       "fine family, one minus the partial pipeline gives E2"},
      {"fine-family-P-image",
       "triangle(P((1-(r+1)*x)/((1-x)*(1-r*x))),7,egf)",
       Expect::Triangle,
       "1; 0, -1; 0, -1, 2; 0, -1, 6, -6; 0, -1, 14, -36, 24; 0, -1, 30, -150, 240, -120; 0, -1, 62, -540, 1560, -1800, 720",
       "fine family pipeline image 1/(1+r(e^x-1))"},
      {"fine-family-P-image-closed",
       "triangle(1/(1+r*(exp(x)-1)),7,egf)",
       Expect::Triangle,
       "1; 0, -1; 0, -1, 2; 0, -1, 6, -6; 0, -1, 14, -36, 24; 0, -1, 30, -150, 240, -120; 0, -1, 62, -540, 1560, -1800, 720",
       "fine family pipeline image from its closed form"},
      {"fine-family-P-image-jfrac",
       "tojfrac(sumudu(P((1-(r+1)*x)/((1-x)*(1-r*x)))),6)",
       Expect::JFrac,
       "-r, 1-3*r, 2-5*r | r*(r-1), 4*r*(r-1)",
       "fine family Jacobi fraction (third printed lam is off, see README)"},
      {"fine-family-T-image",
       "triangle(jfrac([-r,1-2*r,1-2*r,1-2*r,1-2*r,1-2*r,1-2*r],[r*(r-1),r*(r-1),r*(r-1),r*(r-1),r*(r-1),r*(r-1)]),7)",
       Expect::Triangle,
       "1; 0, -1; 0, -1, 2; 0, -1, 5, -5; 0, -1, 9, -21, 14; 0, -1, 14, -56, 84, -42; 0, -1, 20, -120, 300, -330, 132",
       "fine family, T image J(-r,1-2r,..; r(r-1),..)"},
      {"fine-family-T-of-P",
       "triangle(jfrac(tfwd(tojfrac(sumudu(P((1-(r+1)*x)/((1-x)*(1-r*x)))),12))),7)",
       Expect::Triangle,
       "1; 0, -1; 0, -1, 2; 0, -1, 5, -5; 0, -1, 9, -21, 14; 0, -1, 14, -56, 84, -42; 0, -1, 20, -120, 300, -330, 132",
       "fine family, T applied to the pipeline image"},
      {"bell-shift-sequence",
       "(1+(r-1)*x)/(1+(r-1)*x-r*x^2)",
       Expect::Sequence,
       "1, 0, r, r*(1-r), r*(r^2-r+1), r*(1-r)*(r^2+1), r*(r^4-r^3+r^2-r+1)",
       "shifted Bell family starting sequence"},
      {"bell-shift-start",
       "triangle((1+(r-1)*x)/(1+(r-1)*x-r*x^2),7)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 1, -1, 0; 0, 1, -1, 1, 0; 0, 1, -1, 1, -1, 0; 0, 1, -1, 1, -1, 1, 0",
       "shifted Bell family starting triangle"},
      {"bell-shift-reversion",
       "triangle(gfrev((1+(r-1)*x)/(1+(r-1)*x-r*x^2)),7)",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -1, 1, 0; 0, -1, 4, -1, 0; 0, -1, 8, -8, 1, 0; 0, -1, 13, -29, 13, -1, 0",
       "shifted Bell family reversion"},
      {"bell-shift-P-image",
       "triangle(P((1+(r-1)*x)/(1+(r-1)*x-r*x^2)),7,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 6, 6; 0, 1, 14, 36, 24; 0, 1, 30, 150, 240, 120; 0, 1, 62, 540, 1560, 1800, 720",
       "shifted Bell family pipeline image 1/(1+r(1-e^x))"},
      {"bell-shift-signed-euler",
       "triangle(1-partialP((1+(r-1)*x)/(1+(r-1)*x-r*x^2)),7,egf)",
       Expect::Triangle,
       "1; 0, -1; 0, -1, 1; 0, -1, 4, -1; 0, -1, 11, -11, 1; 0, -1, 26, -66, 26, -1; 0, -1, 57, -302, 302, -57, 1",
       "shifted Bell family intermediate signed Eulerian triangle"},
      {"bell-shift-shifted-P-image",
       "triangle(P((1+r*x)/(1+r*x-(r+1)*x^2)),7,egf)",
       Expect::Triangle,
       "1; 1, 1; 3, 5, 2; 13, 31, 24, 6; 75, 233, 266, 132, 24; 541, 2071, 3120, 2310, 840, 120; 4683, 21305, 39842, 39180, 21360, 6120, 720",
       "shifted Bell family with r -> r+1"},
      {"bell-shift-shifted-P-image-B",
       "matmul(triangle(P((1+(r-1)*x)/((1-x)*(1+r*x))),7,egf),Bmat(7))",
       Expect::Triangle,
       "1; 1, 1; 3, 5, 2; 13, 31, 24, 6; 75, 233, 266, 132, 24; 541, 2071, 3120, 2310, 840, 120; 4683, 21305, 39842, 39180, 21360, 6120, 720",
       "shifted Bell family with r -> r+1 as A019538 times B"},
      {"bell-shift-A151575",
       "(1+x)/(1+x-2*x^2)",
       Expect::Sequence,
       "1, 0, 2, -2, 6, -10, 22, -42, 86, -170, 342",
       "A151575 head"},
      {"bell-shift-A004123",
       "sumudu(P((1+x)/(1+x-2*x^2)))",
       Expect::Sequence,
       "1, 2, 10, 74, 730, 9002, 133210",
       "A004123 as the pipeline image of A151575"},
      {"a130850-chain-sequence",
       "(1-(r+1)*x)/(1-x)",
       Expect::Sequence,
       "1, -r, -r, -r, -r, -r, -r",
       "A130850 chain starting sequence"},
      {"a130850-chain-reversion",
       "triangle(gfrev((1-(r+1)*x)/(1-x)),7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 2; 0, 1, 5, 5; 0, 1, 9, 21, 14; 0, 1, 14, 56, 84, 42; 0, 1, 20, 120, 300, 330, 132",
       "A130850 chain reversion, A086810"},
      {"a130850-chain-A028246-ext",
       "triangle(1-integ(partialP((1-(r+1)*x)/(1-x))),7,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 2; 0, 1, 7, 12, 6; 0, 1, 15, 50, 60, 24; 0, 1, 31, 180, 390, 360, 120",
       "extended A028246 display"},
      {"a130850-chain-A028246-ext-oracle",
       "oracle(A028246ext,7)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 1; 0, 1, 3, 2; 0, 1, 7, 12, 6; 0, 1, 15, 50, 60, 24; 0, 1, 31, 180, 390, 360, 120",
       "extended A028246 closed form"},
      {"a130850-chain-A028246-reversion",
       "triangle(diff(revert(integ(1-integ(partialP((1-(r+1)*x)/(1-x)))))),8,egf)",
       Expect::Triangle,
       "1; 0, -1; 0, -1, 2; 0, -1, 7, -7; 0, -1, 18, -52, 34; 0, -1, 41, -253, 437, -213; 0, -1, 88, -1020, 3453, -4203, 1630; 0, -1, 183, -3707, 21670, -49044, 45783, -14747",
       "reversion of extended A028246 (reading, see README)"},
      {"a130850-chain-reverse-then-revert",
       "triangle(diff(revert(integ(isumudu(gf(reverse(triangle(diff(revert(integ(1-integ(partialP((1-(r+1)*x)/(1-x)))))),8,egf))))))),7,egf)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 2, 3, 1, 0; 6, 12, 7, 1, 0; 24, 60, 50, 15, 1, 0; 120, 360, 390, 180, 31, 1, 0",
       "reverse then revert display"},
      {"a130850-chain-reverse-then-revert-closed",
       "triangle(1-log((r+1-exp(r*x))/r),7,egf)",
       Expect::Triangle,
       "1; 1, 0; 1, 1, 0; 2, 3, 1, 0; 6, 12, 7, 1, 0; 24, 60, 50, 15, 1, 0; 120, 360, 390, 180, 31, 1, 0",
       "reverse then revert from 1+ln(r/(r+1-e^(rx)))"},
      {"a130850-chain-A130850-behead",
       "behead(triangle(1-log((r+1-exp(r*x))/r),8,egf))",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 6, 12, 7, 1; 24, 60, 50, 15, 1; 120, 360, 390, 180, 31, 1; 720, 2520, 3360, 2100, 602, 63, 1",
       "beheading gives A130850"},
      {"a130850-chain-A130850-deleham",
       "deleham([1,1,2,2,3,3,4],[1,0,2,0,3,0,4],7)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 6, 12, 7, 1; 24, 60, 50, 15, 1; 120, 360, 390, 180, 31, 1; 720, 2520, 3360, 2100, 602, 63, 1",
       "A130850 Deleham form"},
      {"a130850-chain-A130850-egf",
       "triangle(r/((r+1)*exp(-r*x)-1),7,egf)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 6, 12, 7, 1; 24, 60, 50, 15, 1; 120, 360, 390, 180, 31, 1; 720, 2520, 3360, 2100, 602, 63, 1",
       "A130850 exponential gf"},
      {"a130850-chain-A130850-jfrac",
       "triangle(jfrac(tinv(r+1,r+2,r+1,7)),7)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 6, 12, 7, 1; 24, 60, 50, 15, 1; 120, 360, 390, 180, 31, 1; 720, 2520, 3360, 2100, 602, 63, 1",
       "A130850 Jacobi fraction J(r+1,2r+3,3r+5,..; r+1,4(r+1),..)"},
      {"a130850-chain-A130850-oracle",
       "oracle(A130850,7)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 6, 12, 7, 1; 24, 60, 50, 15, 1; 120, 360, 390, 180, 31, 1; 720, 2520, 3360, 2100, 602, 63, 1",
       "A130850 closed form"},
      {"a130850-chain-A060693",
       "triangle(jfrac([r+1,r+2,r+2,r+2,r+2,r+2,r+2],[r+1,r+1,r+1,r+1,r+1,r+1]),7)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 5, 10, 6, 1; 14, 35, 30, 10, 1; 42, 126, 140, 70, 15, 1; 132, 462, 630, 420, 140, 21, 1",
       "A060693 Jacobi fraction J(r+1,r+2,..; r+1,..)"},
      {"a130850-chain-A060693-T",
       "triangle(jfrac(tfwd(tinv(r+1,r+2,r+1,7))),7)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 5, 10, 6, 1; 14, 35, 30, 10, 1; 42, 126, 140, 70, 15, 1; 132, 462, 630, 420, 140, 21, 1",
       "A060693 as the T image of A130850"},
      {"a130850-chain-A060693-N2B",
       "matmul(triangle(gfrev((1-x)/(1+(r-1)*x)),7),Bmat(7))",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 5, 10, 6, 1; 14, 35, 30, 10, 1; 42, 126, 140, 70, 15, 1; 132, 462, 630, 420, 140, 21, 1",
       "A060693 as N2 times B"},
      {"a130850-chain-A060693-deleham",
       "deleham([1,1,1,1,1,1,1],[1,0,1,0,1,0,1],7)",
       Expect::Triangle,
       "1; 1, 1; 2, 3, 1; 5, 10, 6, 1; 14, 35, 30, 10, 1; 42, 126, 140, 70, 15, 1; 132, 462, 630, 420, 140, 21, 1",
       "A060693 Deleham form"},
      {"galton-family-sequence",
       "(1-2*x)/(1-2*x-r*x^2)",
       Expect::Sequence,
       "1, 0, r, 2*r, r^2+4*r, 4*r^2+8*r, r^3+12*r^2+16*r",
       "Galton family sequence a_n(r)"},
      {"galton-family-coefficients",
       "triangle((1-2*x)/(1-2*x-r*x^2),7)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 2, 0, 0; 0, 4, 1, 0, 0; 0, 8, 4, 0, 0, 0; 0, 16, 12, 1, 0, 0, 0",
       "Galton family coefficient array"},
      {"galton-family-coefficients-oracle",
       "oracle(etude2_seq,7)",
       Expect::Triangle,
       "1; 0, 0; 0, 1, 0; 0, 2, 0, 0; 0, 4, 1, 0, 0; 0, 8, 4, 0, 0, 0; 0, 16, 12, 1, 0, 0, 0",
       "Galton family closed form for a_n(r)"},
      {"galton-family-r0",
       "subs((1-2*x)/(1-2*x-r*x^2),0)",
       Expect::Sequence,
       "1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0",
       "a_n(0)"},
      {"galton-family-r1-pell-variant",
       "subs((1-2*x)/(1-2*x-r*x^2),1)",
       Expect::Sequence,
       "1, 0, 1, 2, 5, 12, 29, 70, 169, 408, 985",
       "a_n(1), Pell variant"},
      {"galton-family-r2",
       "subs((1-2*x)/(1-2*x-r*x^2),2)",
       Expect::Sequence,
       "1, 0, 2, 4, 12, 32, 88, 240, 656, 1792, 4896",
       "a_n(2)"},
      {"galton-family-r3-A054878",
       "subs((1-2*x)/(1-2*x-r*x^2),3)",
       Expect::Sequence,
       "1, 0, 3, 6, 21, 60, 183, 546, 1641, 4920, 14763",
       "a_n(3), A054878"},
      {"galton-family-ibinom",
       "ibinom((1-2*x)/(1-2*x-r*x^2))",
       Expect::Sequence,
       "1, -1, r+1, -(r+1), (r+1)^2, -(r+1)^2, (r+1)^3, -(r+1)^3, (r+1)^4, -(r+1)^4, (r+1)^5",
       "inverse binomial transform of a_n(r)"},
      {"galton-family-invert",
       "invert((1-2*x)/(1-2*x-r*x^2),1)",
       Expect::Sequence,
       "1, 1, r+1, 4*r+1, r^2+11*r+1, 7*r^2+26*r+1, r^3+30*r^2+57*r+1, 10*r^3+102*r^2+120*r+1",
       "INVERT(-1) of a_n(r)"},
      {"galton-family-invert-r0",
       "subs(invert((1-2*x)/(1-2*x-r*x^2),1),0)",
       Expect::Sequence,
       "1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1",
       "INVERT(-1) at r=0"},
      {"galton-family-invert-r1-A001519",
       "subs(invert((1-2*x)/(1-2*x-r*x^2),1),1)",
       Expect::Sequence,
       "1, 1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181",
       "INVERT(-1) at r=1, A001519"},
      {"galton-family-invert-r2-A133494",
       "subs(invert((1-2*x)/(1-2*x-r*x^2),1),2)",
       Expect::Sequence,
       "1, 1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683",
       "INVERT(-1) at r=2, A133494"},
      {"galton-family-invert-r3-A003688",
       "subs(invert((1-2*x)/(1-2*x-r*x^2),1),3)",
       Expect::Sequence,
       "1, 1, 4, 13, 43, 142, 469, 1549, 5116, 16897, 55807",
       "INVERT(-1) at r=3, A003688"},
      {"galton-family-reversion",
       "triangle(gfrev((1-2*x)/(1-2*x-r*x^2)),7)",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -2, 0, 0; 0, -4, 2, 0, 0; 0, -8, 10, 0, 0, 0; 0, -16, 36, -5, 0, 0, 0",
       "Galton family reversion of the coefficient array"},
      {"galton-family-reversion-jfrac",
       "triangle(jfrac([0,2,2,2,2,2,2],[-r,-r,-r,-r,-r,-r]),7)",
       Expect::Triangle,
       "1; 0, 0; 0, -1, 0; 0, -2, 0, 0; 0, -4, 2, 0, 0; 0, -8, 10, 0, 0, 0; 0, -16, 36, -5, 0, 0, 0",
       "Galton family reversion, J(0,2,2,..; -r,..)"},
      {"galton-family-A086810-scaled-sfrac",
       "triangle(sfrac([-r,2-r,-r,2-r,-r,2-r,-r,2-r,-r,2-r,-r,2-r,-r,2-r]),7)",
       Expect::Triangle,
       "1; 0, -1; 0, -2, 2; 0, -4, 10, -5; 0, -8, 36, -42, 14; 0, -16, 112, -224, 168, -42; 0, -32, 320, -960, 1200, -660, 132",
       "signed scaled A086810, S(-r,..; 2-r,..)"},
      {"galton-family-A086810-scaled-jfrac",
       "triangle(jfrac([-r,2*(1-r),2*(1-r),2*(1-r),2*(1-r),2*(1-r),2*(1-r)],[r*(r-2),r*(r-2),r*(r-2),r*(r-2),r*(r-2),r*(r-2)]),7)",
       Expect::Triangle,
       "1; 0, -1; 0, -2, 2; 0, -4, 10, -5; 0, -8, 36, -42, 14; 0, -16, 112, -224, 168, -42; 0, -32, 320, -960, 1200, -660, 132",
       "signed scaled A086810, J(-r,2(1-r),..; r(r-2),..)"},
      {"galton-family-galton-A211402",
       "triangle(P((1-2*x)/(1-2*x-r*x^2)),8,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 2, 3; 0, 4, 18, 15; 0, 8, 84, 180, 105; 0, 16, 360, 1500, 2100, 945; 0, 32, 1488, 10800, 27300, 28350, 10395; 0, 64, 6048, 72240, 294000, 529200, 436590, 135135",
       "Galton triangle A211402 as the pipeline image"},
      {"galton-family-galton-closed",
       "triangle(powq(1+r*(1-exp(2*x)),-1/2),8,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 2, 3; 0, 4, 18, 15; 0, 8, 84, 180, 105; 0, 16, 360, 1500, 2100, 945; 0, 32, 1488, 10800, 27300, 28350, 10395; 0, 64, 6048, 72240, 294000, 529200, 436590, 135135",
       "Galton triangle from 1/sqrt(1+r-re^(2x))"},
      {"galton-family-galton-deleham",
       "deleham([0,2,0,4,0,6,0,8],[1,2,3,4,5,6,7,8],8)",
       Expect::Triangle,
       "1; 0, 1; 0, 2, 3; 0, 4, 18, 15; 0, 8, 84, 180, 105; 0, 16, 360, 1500, 2100, 945; 0, 32, 1488, 10800, 27300, 28350, 10395; 0, 64, 6048, 72240, 294000, 529200, 436590, 135135",
       "Galton triangle Deleham form"},
      {"galton-family-galton-oracle",
       "oracle(galton,8)",
       Expect::Triangle,
       "1; 0, 1; 0, 2, 3; 0, 4, 18, 15; 0, 8, 84, 180, 105; 0, 16, 360, 1500, 2100, 945; 0, 32, 1488, 10800, 27300, 28350, 10395; 0, 64, 6048, 72240, 294000, 529200, 436590, 135135",
       "Galton triangle closed form (2k-1)!! S2(n,k)"},
      {"galton-family-galton-sfrac",
       "triangle(sfrac([r,2*(r+1),3*r,4*(r+1),5*r,6*(r+1),7*r,8*(r+1),9*r,10*(r+1),11*r,12*(r+1),13*r,14*(r+1),15*r,16*(r+1)]),8)",
       Expect::Triangle,
       "1; 0, 1; 0, 2, 3; 0, 4, 18, 15; 0, 8, 84, 180, 105; 0, 16, 360, 1500, 2100, 945; 0, 32, 1488, 10800, 27300, 28350, 10395; 0, 64, 6048, 72240, 294000, 529200, 436590, 135135",
       "Galton triangle Stieltjes fraction"},
      {"galton-family-galton-jfrac",
       "tojfrac(sumudu(powq(1+r*(1-exp(2*x)),-1/2)),8)",
       Expect::JFrac,
       "r, 5*r+2, 9*r+4, 13*r+6 | 2*r*(r+1), 12*r*(r+1), 30*r*(r+1)",
       "Galton Jacobi fraction"},
      {"galton-family-galton-reversion",
       "triangle(diff(revert(integ(powq(1+r*(1-exp(2*x)),-1/2)))),7,egf)",
       Expect::Triangle,
       "1; 0, -1; 0, -2, 0; 0, -4, 2, 0; 0, -8, 16, 0, 0; 0, -16, 88, -16, 0, 0; 0, -32, 416, -272, 0, 0, 0",
       "reversion of the Galton triangle (reading, see README)"},
      {"galton-family-production-matrix",
       "prodmat(powq(1+r*(1-exp(2*x)),-1/2),(exp(2*x)-1)/(2*(1+r*(1-exp(2*x)))),6)",
       Expect::Matrix,
       "r, 1; 2*r*(r+1), 5*r+2, 1; 0, 12*r*(r+1), 9*r+4, 1; 0, 0, 30*r*(r+1), 13*r+6, 1; 0, 0, 0, 56*r*(r+1), 17*r+8, 1; 0, 0, 0, 0, 90*r*(r+1), 21*r+10",
       "Galton family production matrix (g as the square root, see README)"},
      {"galton-family-recurrence",
       "recurrence(prodmat(powq(1+r*(1-exp(2*x)),-1/2),(exp(2*x)-1)/(2*(1+r*(1-exp(2*x)))),6))",
       Expect::JFrac,
       "r, 5*r+2, 9*r+4, 13*r+6, 17*r+8, 21*r+10 | 2*r*(r+1), 12*r*(r+1), 30*r*(r+1), 56*r*(r+1), 90*r*(r+1)",
       "Galton family three-term recurrence from the production matrix"},
      {"andre-family-sequence",
       "(1-3*x-(r-2)*x^2)/((1-x)*(1-2*x-2*r*x^2))",
       Expect::Sequence,
       "1, 0, r, r, r*(2*r+1), r*(6*r+1), r*(4*r^2+14*r+1), r*(20*r^2+30*r+1)",
       "Andre family expansion (corrected denominator, see README)"},
      {"andre-family-r1",
       "subs((1-3*x-(r-2)*x^2)/((1-x)*(1-2*x-2*r*x^2)),1)",
       Expect::Sequence,
       "1, 0, 1, 1, 3, 7, 19, 51, 139, 379, 1035",
       "Andre family at r=1, A052948 shifted"},
      {"andre-family-ibinom",
       "ibinom((1-3*x-(r-2)*x^2)/((1-x)*(1-2*x-2*r*x^2)))",
       Expect::Sequence,
       "1, -1, r+1, -(2*r+1), (r+1)*(2*r+1), -(2*r+1)^2, (r+1)*(2*r+1)^2, -(2*r+1)^3, (r+1)*(2*r+1)^3",
       "Andre family inverse binomial transform"},
      {"andre-family-A038754-signed",
       "subs(ibinom((1-3*x-(r-2)*x^2)/((1-x)*(1-2*x-2*r*x^2))),1)",
       Expect::Sequence,
       "1, -1, 2, -3, 6, -9, 18, -27, 54, -81, 162",
       "signed A038754"},
      {"andre-family-P5-matrix",
       "matrix([[1,0,0,0,0,0,0,0],[1,1,0,0,0,0,0,0],[1,0,1,0,0,0,0,0],[1,0,1,1,0,0,0,0],[1,0,1,0,1,0,0,0],[1,0,1,0,1,1,0,0],[1,0,1,0,1,0,1,0],[1,0,1,0,1,0,1,1]])",
       Expect::Matrix,
       "1; 1, 1; 1, 0, 1; 1, 0, 1, 1; 1, 0, 1, 0, 1; 1, 0, 1, 0, 1, 1; 1, 0, 1, 0, 1, 0, 1; 1, 0, 1, 0, 1, 0, 1, 1",
       "path-graph P5 matrix"},
      {"andre-family-P5-image",
       "apply(matrix([[1,0,0,0,0,0,0,0],[1,1,0,0,0,0,0,0],[1,0,1,0,0,0,0,0],[1,0,1,1,0,0,0,0],[1,0,1,0,1,0,0,0],[1,0,1,0,1,1,0,0],[1,0,1,0,1,0,1,0],[1,0,1,0,1,0,1,1]]),subs(ibinom((1-3*x-(r-2)*x^2)/((1-x)*(1-2*x-2*r*x^2))),1))",
       Expect::Sequence,
       "1, 0, 3, 0, 9, 0, 27, 0",
       "image of signed A038754 under the P5 matrix"},
      {"andre-family-A211608",
       "triangle(P((1-3*x-(r-2)*x^2)/((1-x)*(1-2*x-2*r*x^2))),8,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 3; 0, 1, 9, 15; 0, 1, 21, 90, 105; 0, 1, 45, 375, 1050, 945; 0, 1, 93, 1350, 6825, 14175, 10395; 0, 1, 189, 4515, 36750, 132300, 218295, 135135",
       "coefficient triangle of 1/sqrt(1+2r(1-e^z)), pipeline image"},
      {"andre-family-A211608-closed",
       "triangle(powq(1+2*r*(1-exp(x)),-1/2),8,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 3; 0, 1, 9, 15; 0, 1, 21, 90, 105; 0, 1, 45, 375, 1050, 945; 0, 1, 93, 1350, 6825, 14175, 10395; 0, 1, 189, 4515, 36750, 132300, 218295, 135135",
       "coefficient triangle of 1/sqrt(1+2r(1-e^z)), closed form"},
      {"andre-family-A211608-deleham",
       "deleham([0,1,0,2,0,3,0,4],[1,2,3,4,5,6,7,8],8)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 3; 0, 1, 9, 15; 0, 1, 21, 90, 105; 0, 1, 45, 375, 1050, 945; 0, 1, 93, 1350, 6825, 14175, 10395; 0, 1, 189, 4515, 36750, 132300, 218295, 135135",
       "A211608 Deleham form"},
      {"andre-family-A211608-sfrac",
       "triangle(sfrac([r,2*r+1,3*r,2*(2*r+1),5*r,3*(2*r+1),7*r,4*(2*r+1),9*r,5*(2*r+1),11*r,6*(2*r+1),13*r,7*(2*r+1),15*r,8*(2*r+1)]),8)",
       Expect::Triangle,
       "1; 0, 1; 0, 1, 3; 0, 1, 9, 15; 0, 1, 21, 90, 105; 0, 1, 45, 375, 1050, 945; 0, 1, 93, 1350, 6825, 14175, 10395; 0, 1, 189, 4515, 36750, 132300, 218295, 135135",
       "A211608 Stieltjes fraction"},
      {"andre-family-A211608-jfrac",
       "tojfrac(sumudu(powq(1+2*r*(1-exp(x)),-1/2)),8)",
       Expect::JFrac,
       "r, 5*r+1, 9*r+2 | r*(2*r+1), 6*r*(2*r+1), 15*r*(2*r+1)",
       "A211608 Jacobi fraction"},
      {"andre-family-signed-andre",
       "triangle(diff(revert(integ(powq(1+2*r*(1-exp(-x)),-1/2)))),9,egf)",
       Expect::Triangle,
       "1; 0, 1; 0, -1, 0; 0, 1, -1, 0; 0, -1, 4, 0, 0; 0, 1, -11, 4, 0, 0; 0, -1, 26, -34, 0, 0, 0; 0, 1, -57, 180, -34, 0, 0, 0; 0, -1, 120, -768, 496, 0, 0, 0, 0",
       "signed Andre triangle (x -> -x reading, see README)"},
      {"andre-family-A096078",
       "oracle(A096078,7)",
       Expect::Triangle,
       "1; 1, 1; 1, 4, 4; 1, 11, 34, 34; 1, 26, 180, 496, 496; 1, 57, 768, 4288, 11056, 11056; 1, 120, 2904, 28768, 141584, 349504, 349504",
       "A096078 display from its recurrence"},
      {"andre-family-production-matrix",
       "prodmat(powq(1+2*r*(1-exp(x)),-1/2),(exp(x)-1)/(1+2*r*(1-exp(x))),5)",
       Expect::Matrix,
       "r, 1; r*(2*r+1), 5*r+1, 1; 0, 6*r*(2*r+1), 9*r+2, 1; 0, 0, 15*r*(2*r+1), 13*r+3, 1; 0, 0, 0, 28*r*(2*r+1), 17*r+4",
       "Andre family production matrix (f denominator corrected, see README)"},
      {"andre-family-recurrence",
       "recurrence(prodmat(powq(1+2*r*(1-exp(x)),-1/2),(exp(x)-1)/(1+2*r*(1-exp(x))),5))",
       Expect::JFrac,
       "r, 5*r+1, 9*r+2, 13*r+3, 17*r+4 | r*(2*r+1), 6*r*(2*r+1), 15*r*(2*r+1), 28*r*(2*r+1)",
       "Andre family three-term recurrence from the production matrix"},
      {"andre-family-A176230",
       "sumudu(powq(1+2*r*x,-1/2))",
       Expect::Sequence,
       "1, -r, 3*r^2, -15*r^3, 105*r^4, -945*r^5, 10395*r^6",
       "A176230 moment head"},
  };
  return all;
}

}  // namespace seqpipe
