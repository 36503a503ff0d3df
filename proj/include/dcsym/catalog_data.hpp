#pragma once

#include "dcsym/catalog.hpp"

namespace dcsym {

// Built-in catalog: classification tables, named equations, point
// transformations, exact solutions, reduction rows and contraction specs.
// The same format is accepted from an external file (--catalog).
inline const char* builtin_catalog_text() {
    return R"CAT(
# ============================================================= table 1
# gauge g = 1, arbitrary A(u)

[case 1.1]
table = 1
A = opaque
B = opaque
f = opaque
h = opaque
gen = 1 ; 0 ; 0

[case 1.2a]
table = 1
A = opaque
B = opaque
f = exp(p*x)
h = 1
params = p
picks = p=1 ; p=-1/2
gen = 1 ; 0 ; 0
gen = p*t ; 1 ; 0

[case 1.2a1]
link = 1.2a
table = 1
A = opaque
B = opaque
f = abs(x)^p
h = x^(-1)
params = p
picks = p=1 ; p=-1/2
gen = 1 ; 0 ; 0
gen = (p+2)*t ; x ; 0

[case 1.2b]
table = 1
A = opaque
B = 1
f = exp(x)
h = exp(x) + beta
params = beta
picks = beta=0 ; beta=1 ; beta=-1
gen = 1 ; 0 ; 0
gen = exp(-t) ; -exp(-t) ; 0

[case 1.2c]
table = 1
A = opaque
B = 1
f = abs(x)^p
h = x*abs(x)^p + beta*x^(-1)
params = p, beta
constraint = p != -2
picks = p=1, beta=1 ; p=-1/2, beta=-1
gen = 1 ; 0 ; 0
gen = exp(-(p+2)*t) ; -x*exp(-(p+2)*t) ; 0

[case 1.3]
table = 1
A = opaque
B = 1
f = x^(-2)
h = x^(-1)*ln(abs(x))
gen = 1 ; 0 ; 0
gen = 0 ; exp(-t)*x ; 0

[case 1.4a]
table = 1
A = opaque
B = 0
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = 2*t ; x ; 0

[case 1.4b]
table = 1
A = opaque
B = 1
f = 1
h = x
gen = 1 ; 0 ; 0
gen = 0 ; exp(-t) ; 0
gen = exp(-2*t) ; -x*exp(-2*t) ; 0

# ============================================================= table 2
# A(u) = e^(mu u); mu = 1 unless the row carries mu explicitly

[case 2.1]
table = 2
A = exp(u)
B = 0
f = opaque
h = 1
gen = 1 ; 0 ; 0
gen = t ; 0 ; -1

[case 2.2]
table = 2
A = exp(mu*u)
B = exp(nu*u)
f = abs(x)^p
h = abs(x)^q
params = mu, nu, p, q
constraint = nu != mu
picks = mu=0, nu=1, p=1, q=2 ; mu=1, nu=2, p=-1, q=1
gen = 1 ; 0 ; 0
gen = (p*mu - p*nu - 2*nu - q*mu + mu)*t ; (mu-nu)*x ; q+1

[case 2.2s]
link = 2.2
table = 2
A = exp(mu*u)
B = exp(nu*u)
f = exp(p*x)
h = eps*exp(x)
params = mu, nu, p, eps
constraint = nu != mu
constraint = eps in {-1,1}
picks = mu=0, nu=1, p=1, eps=1 ; mu=1, nu=2, p=-1, eps=-1
gen = 1 ; 0 ; 0
gen = (p*mu - p*nu - mu)*t ; mu-nu ; 1
note = footnote: q != -1 (h normalized to e^x); eps recorded as +-1

[case 2.3]
gauge = gh
table = 2
A = exp(u)
B = u*exp(u)
f = exp(p*x^2+q*x)
g = exp(p*x^2)
h = exp(p*x^2)
params = p, q
picks = p=1/2, q=1 ; p=-1, q=2
gen = 1 ; 0 ; 0
gen = (2*p+q)*t ; 1 ; -2*p

[case 2.4]
table = 2
A = exp(mu*u)
B = exp(nu*u) + kappa
f = 1
h = 1
params = mu, nu, kappa
constraint = nu != mu
picks = mu=0, nu=1, kappa=2 ; mu=1, nu=2, kappa=-1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = (mu-2*nu)*t ; (mu-nu)*x + nu*kappa*t ; 1

[case 2.5]
table = 2
A = exp(u)
B = u
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = t ; x-t ; 1

[case 2.6a]
table = 2
A = exp(u)
B = 0
f = rule (-3*beta*x - 2*gamma1 + alpha)/(beta*x^2 + gamma1*x + gamma0)
h = 1
params = alpha, beta, gamma1, gamma0
picks = alpha=1, beta=1, gamma1=0, gamma0=2 ; alpha=-1/2, beta=2, gamma1=1, gamma0=1
gen = 1 ; 0 ; 0
gen = t ; 0 ; -1
gen = alpha*t ; beta*x^2 + gamma1*x + gamma0 ; beta*x

[case 2.6b]
table = 2
A = exp(u)
B = 1
f = abs(x)^p
h = eps*x*abs(x)^p
params = p, eps
constraint = p != -3
constraint = p != -2
constraint = p != 0
constraint = eps in {-1,1}
picks = p=1, eps=1 ; p=-1/2, eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; x ; p+2
gen = exp(-eps*(p+2)*t) ; -eps*x*exp(-eps*(p+2)*t) ; 0

[case 2.6bs]
link = 2.6b
table = 2
A = exp(u)
B = 1
f = exp(x)
h = eps*exp(x)
params = eps
constraint = eps in {-1,1}
picks = eps=1 ; eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 1
gen = exp(-eps*t) ; -eps*exp(-eps*t) ; 0

[case 2.6c]
table = 2
A = exp(u)
B = 1
f = x^(-2)
h = eps*x^(-1)
params = eps
constraint = eps in {-1,1}
picks = eps=1 ; eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; x ; 0
gen = t ; -eps*t*x ; -1

[case 2.7a]
table = 2
A = exp(u)
B = 0
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = t ; 0 ; -1
gen = 2*t ; x ; 0
gen = 0 ; 1 ; 0

[case 2.7b]
table = 2
A = exp(u)
B = 1
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = t ; -t ; -1
gen = 2*t ; x-t ; 0

[case 2.7c]
table = 2
A = exp(u)
B = 1
f = 1
h = eps*x
params = eps
constraint = eps in {-1,1}
picks = eps=1 ; eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; x ; 2
gen = 0 ; exp(-eps*t) ; 0
gen = exp(-2*eps*t) ; -eps*x*exp(-2*eps*t) ; 0

[case 2.7d]
table = 2
A = exp(u)
B = 0
f = x^(-3)
h = 1
gen = 1 ; 0 ; 0
gen = t ; 0 ; -1
gen = 0 ; x ; -1
gen = 0 ; x^2 ; x

[case 2.7e]
table = 2
A = exp(u)
B = 1
f = x^(-3)
h = x^(-2)
gen = 1 ; 0 ; 0
gen = 0 ; x ; -1
gen = exp(t) ; -x*exp(t) ; 0
gen = 0 ; x^2*exp(t) ; x*exp(t)

# ============================================================= table 3
# A(u) = |u|^mu

[case 3.1]
table = 3
A = abs(u)^mu
B = 0
f = opaque
h = 1
params = mu
picks = mu=1/2 ; mu=2
gen = 1 ; 0 ; 0
gen = mu*t ; 0 ; -u

[case 3.2]
table = 3
A = abs(u)^mu
B = abs(u)^nu
f = abs(x)^p
h = abs(x)^q
params = mu, nu, p, q
constraint = nu != mu
picks = mu=1, nu=2, p=1, q=1 ; mu=1/2, nu=-1, p=2, q=-2
gen = 1 ; 0 ; 0
gen = (mu + p*mu - q*mu - p*nu - 2*nu)*t ; (mu-nu)*x ; (q+1)*u

[case 3.2s]
link = 3.2
table = 3
A = abs(u)^mu
B = abs(u)^nu
f = exp(p*x)
h = eps*exp(x)
params = mu, nu, p, eps
constraint = nu != mu
constraint = eps in {-1,1}
picks = mu=1, nu=2, p=1, eps=1 ; mu=2, nu=1/2, p=-1, eps=-1
gen = 1 ; 0 ; 0
gen = (p*mu - p*nu - mu)*t ; mu-nu ; u
note = footnote: q != -1 (h normalized to e^x)

[case 3.3]
gauge = gh
table = 3
A = abs(u)^mu
B = abs(u)^mu*ln(abs(u))
f = exp(p*x^2+q*x)
g = exp(p*x^2)
h = exp(p*x^2)
params = mu, p, q
picks = mu=1, p=1/2, q=1 ; mu=2, p=-1/2, q=2
gen = 1 ; 0 ; 0
gen = (2*mu*p+q)*t ; 1 ; -2*p*u

[case 3.4]
table = 3
A = abs(u)^mu
B = 1
f = rule (-(3*mu+4)*beta*x - 3)/((mu+1)*beta*x^2 + x)
h = eps*x*f
params = mu, beta, eps
constraint = eps in {-1,1}
picks = mu=1, beta=1, eps=1 ; mu=1/2, beta=2, eps=-1
gen = 1 ; 0 ; 0
gen = exp(eps*t) ; -eps*((mu+1)*beta*x^2 + x)*exp(eps*t) ; -eps*beta*x*u*exp(eps*t)

[case 3.5]
gauge = gh
table = 3
A = 1
B = opaque
f = exp(p*x^2)
g = exp(p*x^2)
h = exp(p*x^2)
params = p
picks = p=1/2 ; p=-1/2
gen = 1 ; 0 ; 0
gen = 0 ; exp(-2*p*t) ; 0

[case 3.6]
gauge = gh
table = 3
A = 1
B = opaque
f = exp(x + gamma*exp(x))
g = exp(gamma*exp(x))
h = exp(gamma*exp(x))
params = gamma
picks = gamma=1 ; gamma=-1/2
gen = 1 ; 0 ; 0
gen = exp(-gamma*t) ; -gamma*exp(-gamma*t) ; 0

[case 3.7]
gauge = gh
table = 3
A = 1
B = u
f = exp(p*x^2+x)
g = exp(p*x^2)
h = exp(p*x^2)
params = p
picks = p=1/2 ; p=-1/2
gen = 1 ; 0 ; 0
gen = t ; 1 ; -2*p

[case 3.8]
table = 3
A = abs(u)^mu
B = abs(u)^nu + kappa
f = 1
h = 1
params = mu, nu, kappa
constraint = nu != mu
picks = mu=1, nu=2, kappa=2 ; mu=2, nu=1/2, kappa=-1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = (mu-2*nu)*t ; (mu-nu)*x + nu*kappa*t ; u

[case 3.9]
table = 3
A = abs(u)^mu
B = ln(abs(u))
f = 1
h = 1
params = mu
picks = mu=1 ; mu=1/2
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = mu*t ; mu*x - t ; u

[case 3.10]
gauge = gh
table = 3
A = 1
B = u
f = exp(p*x^2)
g = exp(p*x^2)
h = exp(p*x^2)
params = p
picks = p=1/2 ; p=-1/2
gen = 1 ; 0 ; 0
gen = 0 ; exp(-2*p*t) ; 0
gen = 0 ; 1 ; -2*p

[case 3.11]
gauge = gh
table = 3
A = 1
B = ln(abs(u))
f = exp(p*x^2)
g = exp(p*x^2)
h = exp(p*x^2)
params = p
picks = p=1/2 ; p=-1/2
gen = 1 ; 0 ; 0
gen = 0 ; exp(-2*p*t) ; 0
gen = 0 ; 1 ; -2*p*u

[case 3.12a]
table = 3
A = abs(u)^mu
B = 0
f = rule (-(3*mu+4)*beta*x - 2*gamma1 + alpha)/((mu+1)*beta*x^2 + gamma1*x + gamma0)
h = 1
params = mu, alpha, beta, gamma1, gamma0
picks = mu=1, alpha=1, beta=1, gamma1=0, gamma0=2 ; mu=1/2, alpha=-1, beta=2, gamma1=1, gamma0=1
gen = 1 ; 0 ; 0
gen = mu*t ; 0 ; -u
gen = alpha*t ; (mu+1)*beta*x^2 + gamma1*x + gamma0 ; beta*x*u

[case 3.12b]
table = 3
A = abs(u)^mu
B = 1
f = abs(x)^p
h = eps*x*abs(x)^p
params = mu, p, eps
constraint = p != -2
constraint = p != -(3*mu+4)/(mu+1)
constraint = eps in {-1,1}
picks = mu=1, p=1, eps=1 ; mu=1/2, p=-1/2, eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; mu*x ; (p+2)*u
gen = exp(-eps*(p+2)*t) ; -eps*x*exp(-eps*(p+2)*t) ; 0

[case 3.12bs]
link = 3.12b
table = 3
A = abs(u)^mu
B = 1
f = exp(x)
h = eps*exp(x)
params = mu, eps
constraint = mu != -1
constraint = eps in {-1,1}
picks = mu=1, eps=1 ; mu=2, eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; mu ; u
gen = exp(-eps*t) ; -eps*exp(-eps*t) ; 0

[case 3.12c]
table = 3
A = abs(u)^mu
B = 1
f = x^(-2)
h = eps*x^(-1)
params = mu, eps
constraint = mu != -2
constraint = eps in {-1,1}
picks = mu=1, eps=1 ; mu=1/2, eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; x ; 0
gen = mu*t ; -eps*mu*t*x ; -u

[case 3.13]
table = 3
A = abs(u)^(-6/5)
B = 1
f = x^2
h = x^2
gen = 1 ; 0 ; 0
gen = 2*t ; 2*x ; -5*u
gen = t^2 ; 2*t*x + x^2 ; -5*(t+x)*u

[case 3.14a]
table = 3
A = abs(u)^mu
B = 0
f = 1
h = 1
params = mu
constraint = mu != -4/3
picks = mu=1/2 ; mu=2 ; mu=-1
gen = 1 ; 0 ; 0
gen = mu*t ; 0 ; -u
gen = 0 ; 1 ; 0
gen = 2*t ; x ; 0

[case 3.14b]
table = 3
A = abs(u)^mu
B = 1
f = 1
h = 1
params = mu
constraint = mu != -4/3
picks = mu=1/2 ; mu=2
gen = 1 ; 0 ; 0
gen = mu*t ; -mu*t ; -u
gen = 0 ; 1 ; 0
gen = 2*t ; x-t ; 0

[case 3.14c]
table = 3
A = abs(u)^mu
B = 1
f = 1
h = eps*x
params = mu, eps
constraint = mu != -4/3
constraint = eps in {-1,1}
picks = mu=1/2, eps=1 ; mu=2, eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; mu*x ; 2*u
gen = 0 ; exp(-eps*t) ; 0
gen = exp(-2*eps*t) ; -eps*x*exp(-2*eps*t) ; 0

[case 3.14d]
table = 3
A = abs(u)^mu
B = 0
f = abs(x)^(-(3*mu+4)/(mu+1))
h = 1
params = mu
constraint = mu != -4/3
constraint = mu != -1
picks = mu=1/2 ; mu=2
gen = 1 ; 0 ; 0
gen = mu*t ; 0 ; -u
gen = (mu+2)*t ; -(mu+1)*x ; 0
gen = 0 ; (mu+1)*x^2 ; x*u

[case 3.14e]
table = 3
A = abs(u)^mu
B = 1
f = abs(x)^(-(3*mu+4)/(mu+1))
h = eps*x*abs(x)^(-(3*mu+4)/(mu+1))
params = mu, eps
constraint = mu != -2
constraint = mu != -4/3
constraint = mu != -1
constraint = eps in {-1,1}
picks = mu=1/2, eps=1 ; mu=2, eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; mu*(mu+1)*x ; -(mu+2)*u
gen = exp(eps*(mu+2)/(mu+1)*t) ; -eps*x*exp(eps*(mu+2)/(mu+1)*t) ; 0
gen = 0 ; (mu+1)*x^2*exp(eps*t) ; x*u*exp(eps*t)
note = Q3 exponent carries eps (drops out of the printed table); matches 3.12b at p = -(3mu+4)/(mu+1)

[case 3.14f]
table = 3
A = abs(u)^(-1)
B = 0
f = exp(x)
h = 1
gen = 1 ; 0 ; 0
gen = t ; 0 ; u
gen = 0 ; 1 ; -u
gen = 2*t ; x ; -x*u

[case 3.14g]
table = 3
A = abs(u)^(-1)
B = 1
f = exp(x)
h = eps*exp(x)
params = eps
constraint = eps in {-1,1}
picks = eps=1 ; eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; -u
gen = 0 ; x + eps*t - 2 ; -(x+eps*t)*u
gen = exp(-eps*t) ; -eps*exp(-eps*t) ; 0

[case 3.14h]
table = 3
A = abs(u)^(-2)
B = 1
f = x^(-2)
h = eps*x^(-1)
params = eps
constraint = eps in {-1,1}
picks = eps=1 ; eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; x ; 0
gen = 2*t ; -2*eps*t*x ; u
gen = 0 ; x^2*exp(eps*t) ; -x*u*exp(eps*t)

[case 3.15a]
table = 3
A = abs(u)^(-4/3)
B = 0
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = 4*t ; 0 ; 3*u
gen = 0 ; 1 ; 0
gen = 2*t ; x ; 0
gen = 0 ; x^2 ; -3*x*u

[case 3.15b]
table = 3
A = abs(u)^(-4/3)
B = 1
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = 4*t ; 4*x ; -3*u
gen = 2*t ; x-t ; 0
gen = 0 ; 1 ; 0
gen = 0 ; (x+t)^2 ; -3*(x+t)*u

[case 3.15c]
table = 3
A = abs(u)^(-4/3)
B = 1
f = 1
h = eps*x
params = eps
constraint = eps in {-1,1}
picks = eps=1 ; eps=-1
gen = 1 ; 0 ; 0
gen = 0 ; 2*x ; -3*u
gen = 0 ; exp(-eps*t) ; 0
gen = exp(-2*eps*t) ; -eps*x*exp(-2*eps*t) ; 0
gen = 0 ; x^2*exp(eps*t) ; -3*x*u*exp(eps*t)

[case 3.16]
table = 3
A = 1
B = u
f = 1
h = 1
gen = 1 ; 0 ; 0
gen = 0 ; 1 ; 0
gen = 0 ; t ; -1
gen = 2*t ; x ; -u
gen = t^2 ; t*x ; -(t*u+x)

# ========================================================= named equations

[equation fast-diffusion]
case = 3.14a
with = mu=-1
var = u

[equation eq3]
case = 3.14g
var = u
params = eps
picks = eps=1 ; eps=-1

[equation eq6]
case = 3.10
var = u
params = p
picks = p=1/2 ; p=-1/2

[equation eq7]
var = v
residual = v_t - v_xx - v*v_x + 2*p*v
params = p
picks = p=1/2 ; p=-1/2

[equation eq9]
case = 3.13
var = u

[equation eq10]
var = v
residual = x^2*v_t - v*v_xx + 5/6*v_x^2 - x^2*v_x

[equation eq22]
case = 3.14a
var = u
params = mu
picks = mu=1/2 ; mu=2

[equation eq23]
case = 2.7a
var = u

[equation weak-nonlinearity]
var = w
residual = w_t - w_xx + 2*p*w*ln(abs(w))
params = p
picks = p=1/2 ; p=1

[equation variable-burgers]
var = v
residual = v_t + 2*p*t^(-1)*v_xx + 2*p*v*v_x
params = p
picks = p=1/2 ; p=1

# ============================================================= transforms

[transform eq3-to-fast-diffusion]
src = eq3
tgt = fast-diffusion
fwd = exp(eps*t)/eps ; x + eps*t ; exp(x+eps*t)*u
inv = ln(eps*t)/eps ; x - ln(eps*t) ; exp(-x)*u
params = eps
picks = eps=1 ; eps=-1

[transform eq6-to-eq7]
src = eq6
tgt = eq7
src_var = u
tgt_var = v
fwd = t ; x ; u + 2*p*x
inv = t ; x ; v - 2*p*x
params = p
picks = p=1/2 ; p=-1/2

[transform eq7-to-variable-burgers]
src = eq7
tgt = variable-burgers
src_var = v
tgt_var = v
fwd = exp(-2*p*t) ; x ; exp(2*p*t)*v
inv = -1/2*ln(t)/p ; x ; t*v
params = p
picks = p=1/2 ; p=1

[transform eq9-to-eq10]
src = eq9
tgt = eq10
src_var = u
tgt_var = v
fwd = t ; x ; u^(-6/5)
inv = t ; x ; v^(-5/6)

[transform cole-hopf]
src = weak-nonlinearity
tgt = eq7
src_var = w
tgt_var = v
differential = true
fwd = t ; x ; 2*w_x/w
inv = t ; x ; v
note = differential substitution; maps solutions forward only

[transform 12a1-to-12a]
src = 1.2a1
tgt = 1.2a
fwd = t ; ln(x) ; u
inv = t ; exp(x) ; u
note = x > 0 branch of x~ = ln|x|

[transform pi-flow-eq10]
src = eq10
tgt = eq10
src_var = v
tgt_var = v
fwd = t/(1-eps*t) ; (t+x)/(1-eps*(t+x)) - t/(1-eps*t) ; v/(1-eps*(t+x))^6
inv = t/(1+eps*t) ; (t+x)/(1+eps*(t+x)) - t/(1+eps*t) ; v/(1+eps*(t+x))^6
params = eps
picks = eps=1/10 ; eps=1/5

[transform d-flow-eq10]
src = eq10
tgt = eq10
src_var = v
tgt_var = v
fwd = s*t ; s*x ; s^3*v
inv = t/s ; x/s ; v/s^3
params = s
picks = s=2 ; s=1/2

[transform x2-flow-eq7]
src = eq7
tgt = eq7
src_var = v
tgt_var = v
fwd = t ; x + eps2*exp(-2*p*t) ; v + 2*eps2*p*exp(-2*p*t)
inv = t ; x - eps2*exp(-2*p*t) ; v - 2*eps2*p*exp(-2*p*t)
params = eps2, p
picks = eps2=1, p=1/2 ; eps2=-1/2, p=1

# ==================================== solutions: fast diffusion, list (5)

[solution fd.1]
equation = fast-diffusion
expr = 1/(1 + delta*exp(x+t))
constants = delta in {-1,1}

[solution fd.2]
equation = fast-diffusion
expr = exp(x)

[solution fd.3]
equation = fast-diffusion
expr = 1/(x - t + C*t*exp(-x/t))
constants = C in {-1,1/2,2}

[solution fd.4]
equation = fast-diffusion
expr = 2*t/(x^2 + delta*t^2)
constants = delta in {-1,1}

[solution fd.5]
equation = fast-diffusion
expr = 2*t/cos(x)^2

[solution fd.6]
equation = fast-diffusion
expr = -2*t/cosh(x)^2

[solution fd.7]
equation = fast-diffusion
expr = 2*t/sinh(x)^2

[solution fd.8]
equation = fast-diffusion
expr = 2*sin(2*t)/(cos(2*t) - cos(2*x))

[solution fd.9]
equation = fast-diffusion
expr = 2*sinh(2*t)/(cosh(2*x) - cosh(2*t))

[solution fd.10]
equation = fast-diffusion
expr = -2*sinh(2*t)/(cosh(2*x) + cosh(2*t))

[solution fd.11]
equation = fast-diffusion
expr = 2*cosh(2*t)/(sinh(2*x) - sinh(2*t))

[solution fd.12]
equation = fast-diffusion
expr = 2*sin(2*t)/(cosh(2*x) - cos(2*t))

[solution fd.13]
equation = fast-diffusion
expr = 2*sinh(2*t)/(cosh(2*t) - cos(2*x))

# =============================== solutions of eq (3), images under (4)

[solution e3.1]
equation = eq3
expr = exp(-(x+eps*t))/(1 + delta*exp(x + eps*t + exp(eps*t)/eps))
constants = delta in {-1,1}
note = exponent x~ + t~; the printed form drops the exponential in t~

[solution e3.2]
equation = eq3
expr = exp(-(x+eps*t))/(x + eps*t - exp(eps*t)/eps + C/eps*exp(eps*t)*exp(-eps*(x+eps*t)*exp(-eps*t)))
constants = C in {-1,1/2,2}
note = re-derived image of (5).3; printed form flattens the nested exponential

[solution e3.3]
equation = eq3
expr = 2*exp(-x)/(eps*(x+eps*t)^2 + delta*exp(2*eps*t))
constants = delta in {-1,1}

[solution e3.4]
equation = eq3
expr = 2*exp(-x)/(eps*cos(x+eps*t)^2)

[solution e3.5]
equation = eq3
expr = -2*exp(-x)/(eps*cosh(x+eps*t)^2)

[solution e3.6]
equation = eq3
expr = 2*exp(-x)/(eps*sin(x+eps*t)^2)

[solution e3.7]
equation = eq3
expr = 2*exp(-(x+eps*t))*sin(2*exp(eps*t)/eps)/(cos(2*exp(eps*t)/eps) - cos(2*(x+eps*t)))

[solution e3.8]
equation = eq3
expr = 2*exp(-(x+eps*t))*sinh(2*exp(eps*t)/eps)/(cosh(2*(x+eps*t)) - cosh(2*exp(eps*t)/eps))

[solution e3.9]
equation = eq3
expr = -2*exp(-(x+eps*t))*sinh(2*exp(eps*t)/eps)/(cosh(2*(x+eps*t)) + cosh(2*exp(eps*t)/eps))

[solution e3.10]
equation = eq3
expr = 2*exp(-(x+eps*t))*cosh(2*exp(eps*t)/eps)/(sinh(2*(x+eps*t)) - sinh(2*exp(eps*t)/eps))

[solution e3.11]
equation = eq3
expr = 2*exp(-(x+eps*t))*sin(2*exp(eps*t)/eps)/(cosh(2*(x+eps*t)) - cos(2*exp(eps*t)/eps))

[solution e3.12]
equation = eq3
expr = 2*exp(-(x+eps*t))*sinh(2*exp(eps*t)/eps)/(cosh(2*exp(eps*t)/eps) - cos(2*(x+eps*t)))

# ============================ solutions (8) of eq (7) and images for (6)

[solution e7.1]
equation = eq7
expr = 0

[solution e7.2]
equation = eq7
expr = 2*p*x + C
constants = C in {-1,1/2,2}

[solution e7.3]
equation = eq7
expr = (2*p*eps*x + C)/(exp(2*p*t) + eps)
constants = eps in {-1,1} ; C in {-1,1/2,2}
note = re-derived from the table-4.2 reduction; the printed numerator C e^{2pt} does not satisfy (7)

[solution e6.1]
equation = eq6
expr = -2*p*x

[solution e6.2]
equation = eq6
expr = C
constants = C in {-1,1/2,2}

[solution e6.3]
equation = eq6
expr = (2*p*eps*x + C)/(exp(2*p*t) + eps) - 2*p*x
constants = eps in {-1,1} ; C in {-1,1/2,2}

# ========================================= solutions of eq (10), section 6

[solution q10.1]
equation = eq10
expr = delta
constants = delta in {0,1}

[solution q10.2]
equation = eq10
expr = 2*x^3

[solution q10.3]
equation = eq10
expr = 3*x^4/(4*t) + 2*x^3

[solution q10.4]
equation = eq10
expr = x*(t+x)^2*(5*x^3/(4*t^3) + 2*x^2/t^2)

[solution q10.5]
equation = eq10
expr = C*(t+x)^6
constants = C in {-1,1/2,2}

[solution q10.6]
equation = eq10
expr = 2*x^3/t^3*(t+x)^3

[solution q10.7]
equation = eq10
expr = 3*x^4*(t+x)^2/(4*t^3*(C*t-1)) + 2*x^3/t^3*(t+x)^3
constants = C in {-1,1/4}
note = re-derived as the Pi-flow image of q10.3 shifted in t; the printed denominator 4t(Ct-1) drops a t^2

[solution q10.8]
equation = eq10
expr = x*(t+x)^2/(C*t+1)*(5*x^3/(4*t^3) + 2*x^2/t^2*(C*(t+x)+1))
constants = C in {-1/4,1}

[solution q10.9]
equation = eq10
expr = C1*(x + t + C0)^6
constants = C1 in {-1,1/2} ; C0 in {0,1}
note = nonclassical reduction with d_t + d_x

# ==================== solutions of the weak-nonlinearity heat equation

[solution wnl.1]
equation = weak-nonlinearity
expr = exp(C*exp(-2*p*t))
constants = C in {-1,1/2,2}

[solution wnl.2]
equation = weak-nonlinearity
expr = exp(p*x^2/2 + C*x/2 + (C^2+4*p)/(8*p))
constants = C in {-1,1/2,2}

[solution wnl.3]
equation = weak-nonlinearity
expr = exp(p*eps*x^2/(2*(exp(2*p*t)+eps)) + eps/2*exp(-2*p*t)*ln(exp(2*p*t)+eps))
constants = eps in {-1,1}

# ==================================== reductions: table 4, equation (7)

[reduction t4.1]
equation = eq7
subalgebra = X1+alpha*X3
form = phi
omega = x - alpha*t
eliminate = x ; w + alpha*t
ode = phi_ww + (phi+alpha)*phi_w - 2*p*phi
params = p, alpha
picks = p=1/2, alpha=1 ; p=-1/2, alpha=-2

[reduction t4.2]
equation = eq7
subalgebra = X3+eps*X2
form = phi + 2*p*eps*x/(exp(2*p*t)+eps)
omega = t
eliminate = t ; w
ode = phi_w + 2*p*exp(2*p*w)/(exp(2*p*w)+eps)*phi
sol = C/(exp(2*p*w)+eps)
params = p, eps
picks = p=1/2, eps=1 ; p=-1/2, eps=-1

[reduction t4.3]
equation = eq7
subalgebra = X2
form = phi + 2*p*x
omega = t
eliminate = t ; w
ode = phi_w
sol = C
params = p
picks = p=1/2 ; p=-1/2

[reduction t4.4]
equation = eq7
subalgebra = X1,X3
form = C
omega = t
eliminate = t ; w
ode = C
params = p
picks = p=1/2 ; p=-1/2

[reduction t4.5]
equation = eq7
subalgebra = X1+beta*X3,X2
form = 2*p*x - 2*p*beta*t + C
omega = t
eliminate = t ; w
ode = beta
params = p, beta
picks = p=1/2, beta=1 ; p=-1/2, beta=-1/2

# ======================= reductions of equation (10): (11), (12), (13)

[reduction q11]
equation = eq10
subalgebra = P_t
form = phi
omega = x
eliminate = x ; w
ode = phi*phi_ww - 5/6*phi_w^2 + w^2*phi_w
sol = C
sol = 2*w^3

[reduction q12]
equation = eq10
subalgebra = D
form = t^3*phi
omega = x/t
eliminate = x ; w*t
factor = t^4
ode = phi*phi_ww - 5/6*phi_w^2 - 3*w^2*phi + (w+1)*w^2*phi_w
sol = 2*w^3
sol = 3/4*w^4 + 2*w^3
sol = 2*w^3*(w+1)^3
sol = 5/4*w^4*(w+1)^2 + 2*w^3*(w+1)^2

[reduction q13]
equation = eq10
subalgebra = P_t+Pi
form = ((t+x)^2+1)^3*phi
omega = arctan(t+x) - arctan(t)
eliminate = x ; sin(w)*(1+t^2)/(cos(w)-t*sin(w))
factor = (1+t^2)^4*(cos(w)-t*sin(w))^(-8)
ode = phi*phi_ww - 5/6*phi_w^2 + phi_w*sin(w)^2 + 6*phi^2

[reduction qnc]
equation = eq10
subalgebra = d_t+d_x (nonclassical)
form = phi
omega = t + x
eliminate = x ; w - t
ode = phi*phi_ww - 5/6*phi_w^2
sol = C1*(w+C0)^6

# ==================================== reductions: table 5, equation (22)

[reduction t5.1]
equation = eq22
subalgebra = Q3
form = phi
omega = t
eliminate = t ; w
ode = phi_w
sol = 2
params = mu
picks = mu=1/2 ; mu=2

[reduction t5.2]
equation = eq22
subalgebra = Q4
form = phi*abs(x)^(2/mu)
branch = x>0
omega = t
eliminate = t ; w
factor = x^(2/mu)
ode = phi_w - 2*(2+mu)/mu^2*phi^(mu+1)
params = mu
picks = mu=1/2 ; mu=2

[reduction t5.3]
equation = eq22
subalgebra = Q1
form = phi
omega = x
eliminate = x ; w
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww
sol = (w+2)^(1/(mu+1))
params = mu
picks = mu=1/2 ; mu=2

[reduction t5.4]
equation = eq22
subalgebra = Q2
form = phi*abs(t)^(-1/mu)
branch = t>0
omega = x
eliminate = x ; w
factor = abs(t)^(-1/mu-1)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww + phi/mu
params = mu
picks = mu=1/2 ; mu=2

[reduction t5.4m]
equation = eq22
subalgebra = Q2
form = phi*abs(t)^(-1/mu)
branch = t<0
omega = x
eliminate = x ; w
factor = abs(t)^(-1/mu-1)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww - phi/mu
params = mu
picks = mu=1/2 ; mu=2

[reduction t5.5]
equation = eq22
subalgebra = Q1+eps*Q3
form = phi
omega = x - eps*t
eliminate = x ; w + eps*t
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww + eps*phi_w
params = mu, eps
picks = mu=1/2, eps=1 ; mu=2, eps=-1

[reduction t5.6]
equation = eq22
subalgebra = Q2+eps*Q3
form = phi*abs(t)^(-1/mu)
branch = t>0
omega = x - eps*ln(abs(t))
eliminate = x ; w + eps*ln(abs(t))
factor = abs(t)^(-1/mu-1)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww + eps*phi_w + phi/mu
params = mu, eps
picks = mu=1/2, eps=1 ; mu=2, eps=-1

[reduction t5.6m]
equation = eq22
subalgebra = Q2+eps*Q3
form = phi*abs(t)^(-1/mu)
branch = t<0
omega = x - eps*ln(abs(t))
eliminate = x ; w + eps*ln(abs(t))
factor = abs(t)^(-1/mu-1)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww - eps*phi_w - phi/mu
params = mu, eps
picks = mu=1/2, eps=1 ; mu=2, eps=-1

[reduction t5.7]
equation = eq22
subalgebra = Q1+eps*Q4
form = phi*exp(2*eps*t/mu)
omega = x*exp(-eps*t)
eliminate = x ; w*exp(eps*t)
factor = exp(2*eps*t/mu)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww + eps*w*phi_w - 2*eps/mu*phi
params = mu, eps
picks = mu=1/2, eps=1 ; mu=2, eps=-1

[reduction t5.8]
equation = eq22
subalgebra = Q2+alpha*Q4
form = phi*abs(t)^((2*alpha-1)/mu)
branch = t>0
omega = x*abs(t)^(-alpha)
eliminate = x ; w*abs(t)^alpha
factor = abs(t)^((2*alpha-1)/mu-1)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww + alpha*w*phi_w - (2*alpha-1)/mu*phi
params = mu, alpha
picks = mu=1/2, alpha=2 ; mu=2, alpha=1/2

[reduction t5.8m]
equation = eq22
subalgebra = Q2+alpha*Q4
form = phi*abs(t)^((2*alpha-1)/mu)
branch = t<0
omega = x*abs(t)^(-alpha)
eliminate = x ; w*abs(t)^alpha
factor = abs(t)^((2*alpha-1)/mu-1)
ode = mu*phi^(mu-1)*phi_w^2 + phi^mu*phi_ww - alpha*w*phi_w + (2*alpha-1)/mu*phi
params = mu, alpha
picks = mu=1/2, alpha=2 ; mu=2, alpha=1/2

# ==================================== reductions: table 6, equation (23)

[reduction t6.1]
equation = eq23
subalgebra = Q3
form = phi
omega = t
eliminate = t ; w
ode = phi_w

[reduction t6.2]
equation = eq23
subalgebra = Q4
form = phi + 2*ln(abs(x))
branch = x>0
omega = t
eliminate = t ; w
ode = phi_w - 2*exp(phi)

[reduction t6.3]
equation = eq23
subalgebra = Q1
form = phi
omega = x
eliminate = x ; w
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww

[reduction t6.4]
equation = eq23
subalgebra = Q2
form = phi - ln(abs(t))
branch = t>0
omega = x
eliminate = x ; w
factor = abs(t)^(-1)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww + 1

[reduction t6.4m]
equation = eq23
subalgebra = Q2
form = phi - ln(abs(t))
branch = t<0
omega = x
eliminate = x ; w
factor = abs(t)^(-1)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww - 1

[reduction t6.5]
equation = eq23
subalgebra = Q1+eps*Q3
form = phi
omega = x - eps*t
eliminate = x ; w + eps*t
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww + eps*phi_w
params = eps
picks = eps=1 ; eps=-1

[reduction t6.6]
equation = eq23
subalgebra = Q2+eps*Q3
form = phi - ln(abs(t))
branch = t>0
omega = x - eps*ln(abs(t))
eliminate = x ; w + eps*ln(abs(t))
factor = abs(t)^(-1)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww + eps*phi_w + 1
params = eps
picks = eps=1 ; eps=-1

[reduction t6.6m]
equation = eq23
subalgebra = Q2+eps*Q3
form = phi - ln(abs(t))
branch = t<0
omega = x - eps*ln(abs(t))
eliminate = x ; w + eps*ln(abs(t))
factor = abs(t)^(-1)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww - eps*phi_w - 1
params = eps
picks = eps=1 ; eps=-1

[reduction t6.7]
equation = eq23
subalgebra = Q1+eps*Q4
form = phi + 2*eps*t
omega = x*exp(-eps*t)
eliminate = x ; w*exp(eps*t)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww + eps*w*phi_w - 2*eps
params = eps
picks = eps=1 ; eps=-1

[reduction t6.8]
equation = eq23
subalgebra = Q2+alpha*Q4
form = phi + (2*alpha-1)*ln(abs(t))
branch = t>0
omega = x*abs(t)^(-alpha)
eliminate = x ; w*abs(t)^alpha
factor = abs(t)^(-1)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww + alpha*w*phi_w - (2*alpha-1)
params = alpha
picks = alpha=2 ; alpha=1/2

[reduction t6.8m]
equation = eq23
subalgebra = Q2+alpha*Q4
form = phi + (2*alpha-1)*ln(abs(t))
branch = t<0
omega = x*abs(t)^(-alpha)
eliminate = x ; w*abs(t)^alpha
factor = abs(t)^(-1)
ode = exp(phi)*phi_w^2 + exp(phi)*phi_ww - alpha*w*phi_w + (2*alpha-1)
params = alpha
picks = alpha=2 ; alpha=1/2

# ============================================================== algebras

[algebra sl2-eq10]
var = v
gen = 1 ; 0 ; 0
gen = t ; x ; 3*v
gen = t^2 ; 2*t*x + x^2 ; 6*(t+x)*v
bracket = 1, 2 ; 1 = 1
bracket = 1, 3 ; 2 = 2
bracket = 2, 3 ; 3 = 1

[algebra sl2-eq9]
var = u
gen = 1 ; 0 ; 0
gen = 2*t ; 2*x ; -5*u
gen = t^2 ; 2*t*x + x^2 ; -5*(t+x)*u
bracket = 1, 2 ; 1 = 2
bracket = 1, 3 ; 2 = 1
bracket = 2, 3 ; 3 = 2

[algebra a21a1-eq7]
var = v
gen = 1 ; 0 ; 0
gen = 0 ; exp(-2*p*t) ; 2*p*exp(-2*p*t)
gen = 0 ; 1 ; 0
bracket = 1, 2 ; 2 = -2*p
params = p
picks = p=1/2 ; p=-1/2

[algebra t2-7d]
var = u
gen = 1 ; 0 ; 0
gen = t ; 0 ; -1
gen = 0 ; x ; -1
gen = 0 ; x^2 ; x
bracket = 1, 2 ; 1 = 1
bracket = 3, 4 ; 4 = 1

# ==================================================== contractions (sec. 3)
# u-shift family: u = 1 + u~/delta, source mu = delta

[contraction 3.1-to-2.1]
source = 3.1
target = 2.1
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta

[contraction 3.2-to-2.2]
source = 3.2
target = 2.2
srcsub = mu = delta*mu, nu = delta*nu
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
picks = mu=1, nu=2, p=1, q=2 ; mu=1, nu=-1, p=-1, q=1

[contraction 3.2s-to-2.2s]
source = 3.2s
target = 2.2s
srcsub = mu = delta*mu, nu = delta*nu
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
picks = mu=1, nu=2, p=1, eps=1 ; mu=1, nu=-1, p=-1, eps=-1

[contraction 3.3-to-2.3]
source = 3.3
target = 2.3
srcsub = mu = delta, p = p/delta^2, q = q/delta
scale = delta^(-2) ; 0 ; delta ; -delta
xmap = x/delta ; delta*x
gauge = delta ; 1 ; delta ; 0
recipe = delta^2*Q1
recipe = delta*Q2
picks = p=1/2, q=1 ; p=-1, q=2

[contraction 3.8-to-2.4]
source = 3.8
target = 2.4
srcsub = mu = delta, nu = delta*nu
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2
recipe = Q3/delta
picks = mu=1, nu=2, kappa=2 ; mu=1, nu=-1, kappa=-1

[contraction 3.9-to-2.5]
source = 3.9
target = 2.5
srcsub = mu = delta
scale = delta^(-2) ; 0 ; delta ; -delta
xmap = x/delta ; delta*x
gauge = delta ; 1 ; delta ; 0
recipe = delta^2*Q1
recipe = delta*Q2
recipe = Q3/delta

[contraction 3.12a-to-2.6a]
source = 3.12a
target = 2.6a
srcsub = mu = delta, alpha = delta*alpha, gamma1 = delta*gamma1, gamma0 = delta*gamma0
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
recipe = Q3/delta
picks = alpha=1, beta=1, gamma1=0, gamma0=2 ; alpha=-1/2, beta=2, gamma1=1, gamma0=1

[contraction 3.12b-to-2.6b]
source = 3.12b
target = 2.6b
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
recipe = Q3
picks = p=1, eps=1 ; p=-1/2, eps=-1

[contraction 3.12bs-to-2.6bs]
source = 3.12bs
target = 2.6bs
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
recipe = Q3
picks = eps=1 ; eps=-1

[contraction 3.14a-to-2.7a]
source = 3.14a
target = 2.7a
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
recipe = Q4
recipe = Q3

[contraction 3.14b-to-2.7b]
source = 3.14b
target = 2.7b
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q3
recipe = Q2/delta
recipe = Q4

[contraction 3.14c-to-2.7c]
source = 3.14c
target = 2.7c
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
recipe = Q3
recipe = Q4
picks = eps=1 ; eps=-1

[contraction 3.14d-to-2.7d]
source = 3.14d
target = 2.7d
srcsub = mu = delta
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/delta
recipe = (delta+2)/(delta*(delta+1))*Q2 - Q3/(delta+1)
recipe = Q4/(delta+1)

[contraction 3.14e-to-2.7e]
source = 3.14e
target = 2.7e
srcsub = mu = delta, eps = 1
scale = 1 ; 0 ; delta ; -delta
recipe = Q1
recipe = Q2/(delta*(delta+1))
recipe = Q3
recipe = Q4/(delta+1)

# x-shift family: x = 1 + x~/delta, power profiles become exponentials

[contraction 2.2-to-2.2s]
source = 2.2
target = 2.2s
srcsub = p = delta*p, q = delta
scale = delta^(-(mu-2*nu)/(nu-mu)) ; 0 ; 1 ; -ln(delta)/(nu-mu)
xmap = delta*x - delta ; 1 + x/delta
gauge = delta^((mu-2*nu)/(nu-mu)+1) ; delta^((mu-2*nu)/(nu-mu)+2) ; delta^((mu-2*nu)/(nu-mu)+1) ; 0
recipe = delta^((mu-2*nu)/(nu-mu))*Q1
recipe = Q2/delta
picks = mu=0, nu=1, p=1, eps=1 ; mu=1, nu=2, p=-1, eps=1

[contraction 2.6b-to-2.6bs]
source = 2.6b
target = 2.6bs
srcsub = p = delta
scale = delta ; 0 ; 1 ; ln(delta)
xmap = delta*x - delta ; 1 + x/delta
gauge = 1 ; delta ; 1 ; 0
recipe = Q1/delta
recipe = Q2/delta
recipe = Q3/delta
picks = eps=1 ; eps=-1

[contraction 3.2-to-3.2s]
source = 3.2
target = 3.2s
srcsub = p = delta*p, q = delta
scale = delta^(-(mu-2*nu)/(nu-mu)) ; 0 ; delta^(-1/(nu-mu)) ; 0
xmap = delta*x - delta ; 1 + x/delta
gauge = delta^((mu-2*nu)/(nu-mu)+1) ; delta^((mu-2*nu)/(nu-mu)+2) ; delta^((mu-2*nu)/(nu-mu)+1) ; 0
recipe = delta^((mu-2*nu)/(nu-mu))*Q1
recipe = Q2/delta
picks = mu=1, nu=2, p=1, eps=1 ; mu=1/2, nu=-1, p=-1, eps=1

[contraction 3.12b-to-3.12bs]
source = 3.12b
target = 3.12bs
srcsub = p = delta
scale = delta ; 0 ; delta^(1/mu) ; 0
xmap = delta*x - delta ; 1 + x/delta
gauge = 1 ; delta ; 1 ; 0
recipe = Q1/delta
recipe = Q2/delta
recipe = Q3/delta
picks = mu=1, eps=1 ; mu=2, eps=1

# table-1 family: t = t~/delta, x = 1 + x~/delta, A = A/delta

[contraction 12a1-to-12a]
source = 1.2a1
target = 1.2a
srcsub = p = delta*p
srcA = A/delta
scale = delta ; 0 ; 1 ; 0
xmap = delta*x - delta ; 1 + x/delta
gauge = 1 ; delta ; 1 ; 0
recipe = Q1/delta
recipe = Q2/delta
picks = p=1 ; p=-1/2

[contraction 12c-to-12b]
source = 1.2c
target = 1.2b
srcsub = p = delta
srcA = A/delta
scale = delta ; 0 ; 1 ; 0
xmap = delta*x - delta ; 1 + x/delta
gauge = 1 ; delta ; 1 ; 0
recipe = Q1/delta
recipe = Q2/delta
picks = beta=1 ; beta=-1

# parameter limits p -> -2

[contraction 2.6b-to-2.6c]
source = 2.6b
target = 2.6c
limit = -2
srcsub = p = delta
recipe = Q1
recipe = Q2
recipe = -(Q3 + eps*Q2 - Q1)/(eps*(delta+2))
picks = eps=1 ; eps=-1

[contraction 3.12b-to-3.12c]
source = 3.12b
target = 3.12c
limit = -2
srcsub = p = delta
recipe = Q1
recipe = Q2/mu
recipe = -(mu*Q3 + eps*Q2 - mu*Q1)/(eps*(delta+2))
picks = mu=1, eps=1 ; mu=1/2, eps=-1

# ansatz/reduced-ODE contractions, table 5 -> table 6

[contraction ansatz-5.1]
kind = ansatz
source = t5.1
target = t6.1
lambda = mu
odescale = mu

[contraction ansatz-5.2]
kind = ansatz
source = t5.2
target = t6.2
lambda = mu
odescale = mu

[contraction ansatz-5.3]
kind = ansatz
source = t5.3
target = t6.3
lambda = mu
odescale = mu

[contraction ansatz-5.4]
kind = ansatz
source = t5.4
target = t6.4
lambda = mu
odescale = mu

[contraction ansatz-5.4m]
kind = ansatz
source = t5.4m
target = t6.4m
lambda = mu
odescale = mu

[contraction ansatz-5.5]
kind = ansatz
source = t5.5
target = t6.5
lambda = mu
odescale = mu

[contraction ansatz-5.6]
kind = ansatz
source = t5.6
target = t6.6
lambda = mu
odescale = mu

[contraction ansatz-5.6m]
kind = ansatz
source = t5.6m
target = t6.6m
lambda = mu
odescale = mu

[contraction ansatz-5.7]
kind = ansatz
source = t5.7
target = t6.7
lambda = mu
odescale = mu

[contraction ansatz-5.8]
kind = ansatz
source = t5.8
target = t6.8
lambda = mu
odescale = mu

[contraction ansatz-5.8m]
kind = ansatz
source = t5.8m
target = t6.8m
lambda = mu
odescale = mu
)CAT";
}

inline const Catalog& Catalog::builtin() {
    static const Catalog cat = [] {
        Catalog c;
        c.load_text(builtin_catalog_text());
        return c;
    }();
    return cat;
}

} // namespace dcsym
