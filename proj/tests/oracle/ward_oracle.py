#!/usr/bin/env python3
# Independent oracle for the golden values frozen into the C++ tests.
# Pure Python integers/fractions; shares no code with the library.
# Run: python3 tests/oracle/ward_oracle.py
from fractions import Fraction as F
from math import comb, factorial as fa
from functools import lru_cache
def C(n,k):
    if k<0: return 0
    if n>=0: return comb(n,k) if k<=n else 0
    return (-1)**k*comb(k-n-1,k)
N=31
W1=[[0]*(N+2) for _ in range(N+2)]; W2=[[0]*(N+2) for _ in range(N+2)]
W1[0][0]=W2[0][0]=1
for n in range(1,N+1):
    for k in range(1,n+1):
        W1[n][k]=(n+k-1)*(W1[n-1][k]+W1[n-1][k-1])
        W2[n][k]=k*W2[n-1][k]+(n+k-1)*W2[n-1][k-1]
def WL(n,k):
    if n==0 and k==0: return 1
    if k<1 or k>n: return 0
    return fa(n+k)//fa(k)*C(n-1,k-1)
def ff(x,n):
    r=1
    for i in range(n): r*=x-i
    return r
def scaleV(X,n,k):
    if n==0 and k==0: return 1
    if k<1 or k>n: return 0
    v=F(fa(2*n)*X(n,k),ff(n+k,n)); assert v.denominator==1; return int(v)
def scaleB(X,n,k):
    if n==0 and k==0: return 1
    if k<1 or k>n: return 0
    return C(2*n,n+k)*X(n,k)
w1=lambda n,k: W1[n][k] if 0<=k<=n else 0
w2=lambda n,k: W2[n][k] if 0<=k<=n else 0
VW1=lambda n,k: scaleV(w1,n,k); VW2=lambda n,k: scaleV(w2,n,k); VWL=lambda n,k: scaleV(WL,n,k)
BW1=lambda n,k: scaleB(w1,n,k); BW2=lambda n,k: scaleB(w2,n,k); BWL=lambda n,k: scaleB(WL,n,k)
def get(T,n,k):
    if n<0 or k<0: return 0
    return T(n,k)
# partitions
def parts(n,k):
    if n==0 and k==0: return [()]
    if k==0 or k>n: return []
    out=[]
    def rec(rem,mx,pre):
        if rem==0: out.append(tuple(pre)); return
        for p in range(min(rem,mx),0,-1): rec(rem-p,p,pre+[p])
    rec(n-k,k,[k]); return out
def PT(n,k,a):
    if n==0 and k==0: return F(1)
    s=F(0)
    for q in parts(n,k):
        q2=list(q)+[0]; t=F((-1)**q[0])
        for j in range(len(q)): t*=C(q2[j],q2[j+1])*a(j+1)**q2[j]
        s+=t
    return s
a1=lambda j:F(j,j+1); a2=lambda j:F(1,j+1); a3=lambda j:F(1)
print("parts(4,2)",parts(4,2), PT(2,1,a3), PT(3,2,a2))
for n in range(0,13):
    for k in range(0,n+1):
        assert (-1)**k*ff(n+k,n)*PT(n,k,a1)==w1(n,k),(n,k)
        assert (-1)**k*ff(n+k,n)*PT(n,k,a2)==w2(n,k),(n,k)
        assert (-1)**k*ff(n+k,n)*PT(n,k,a3)==WL(n,k)
        assert (-1)**k*fa(2*n)*PT(n,k,a1)==VW1(n,k)
        assert (-1)**k*fa(2*n)*PT(n,k,a3)==VWL(n,k)
        assert (-1)**k*F(fa(2*n),fa(k)*fa(n-k))*PT(n,k,a2)==BW2(n,k)
print("PT ok")
# recurrences
M=30
for n in range(1,M+1):
  for k in range(1,n+1):
    # eq6
    if n<=20: assert WL(n,k)==sum((-1)**(m+k)*C(n+k,n+m)*C(n+m-1,m-1)*F(fa(n+m),fa(m)) for m in range(k+1))
    if k>=2: assert WL(n,k)==F((n+k)*(n-1),n)*(get(WL,n-1,k)+F(n+k-1,k-1)*get(WL,n-1,k-1)),(n,k)
    assert WL(n,k)==2*(n+k-1)*get(WL,n-1,k-1)+(n+2*k-1)*get(WL,n-1,k)
    assert WL(n,k)==(n+k)*(get(WL,n-1,k)+F(n+k-1,k)*get(WL,n-1,k-1))
    if n>=2: assert WL(n,k)==2*(2*n-1)*get(WL,n-1,k-1)-n*(n-2)*get(WL,n-2,k)-(-2*n+1)*get(WL,n-1,k),(n,k)
    assert VW1(n,k)==F(2*n*(2*n-1),n+k)*((n+k-1)*get(VW1,n-1,k)+k*get(VW1,n-1,k-1))
    assert VW2(n,k)==F(2*n*k*(2*n-1),n+k)*(get(VW2,n-1,k)+get(VW2,n-1,k-1)),(n,k)
    assert VWL(n,k)==2*n*(2*n-1)*(get(VWL,n-1,k)+get(VWL,n-1,k-1))
    if n-k>=1:
      assert BW1(n,k)==F(2*n*(2*n-1),n+k)*(F(n+k-1,n-k)*get(BW1,n-1,k)+get(BW1,n-1,k-1))
      assert BW2(n,k)==F(2*n*(2*n-1),n+k)*(F(k,n-k)*get(BW2,n-1,k)+get(BW2,n-1,k-1))
      assert BWL(n,k)==2*n*(2*n-1)*(F(1,n-k)*get(BWL,n-1,k)+F(1,k)*get(BWL,n-1,k-1))
    if n>=2 and k>=2:
      r=F(-4*(n-2)*(2*n-1)**2,n)*(get(BWL,n-2,k-2)-2*get(BWL,n-2,k-1)+get(BWL,n-2,k))+F(4*(2*n-1),n*(2*n-3))*((2*(n-1)**2-1)*get(BWL,n-1,k-1)+2*(n-1)**2*get(BWL,n-1,k))
      if r!=BWL(n,k): print("order5 fail",n,k,r,BWL(n,k)); 
    for m in range(1,n):
      s=F(0)
      for j in range(m+1):
        kj=k-j
        if kj<1 or kj>n-m: continue
        s+=F(fa(kj),fa(n-m+kj))*C(m,j)*WL(n-m,kj)
      assert WL(n,k)==F(fa(n+k),fa(k))*s
      s=sum(C(m,j)*get(VWL,n-m,k-j) for j in range(m+1))
      assert VWL(n,k)==F(fa(2*n),fa(2*(n-m)))*s
      if n-k>=1:
        s=F(0)
        for j in range(m+1):
          kj=k-j
          if kj<1 or kj>n-m: continue
          s+=F(fa(kj)*fa(n-m-kj),fa(2*(n-m)))*C(m,j)*BWL(n-m,kj)
        assert BWL(n,k)==F(fa(2*n),fa(k)*fa(n-k))*s
print("recs ok")
@lru_cache(None)
def s1(n,k):
    if n==0 and k==0: return 1
    if n==0 or k==0: return 0
    return s1(n-1,k-1)+(n-1)*s1(n-1,k)
@lru_cache(None)
def s2(n,k):
    if n==0 and k==0: return 1
    if n==0 or k==0: return 0
    return s2(n-1,k-1)+k*s2(n-1,k)
def lah(n,k):
    if n==0 and k==0: return 1
    if k<1 or k>n: return 0
    return fa(n)//fa(k)*C(n-1,k-1)
for n in range(0,16):
    assert sum(BW1(n,k) for k in range(n+1))==s1(2*n,n)
    assert sum(BW2(n,k) for k in range(n+1))==s2(2*n,n)
for n in range(0,26):
    assert sum(BWL(n,k) for k in range(n+1))==lah(2*n,n)
    for k in range(1,n+1):
        rf=1
        for i in range(n-k): rf*=(n-k+1+i)
        assert rf*lah(n,k)==C(n,k)*sum(C(k,j)*get(VWL,n-k,j) for j in range(k+1)),(n,k)
print("conj ok")
for n in range(4): print([VW1(n,k) for k in range(n+1)],[VW2(n,k) for k in range(n+1)],[BW1(n,k) for k in range(n+1)],[BW2(n,k) for k in range(n+1)],[BWL(n,k) for k in range(n+1)])
print(s1(4,2),s2(4,2),lah(4,2), C(-2,3))
for n in range(1,15):
  for k in range(1,n+1):
    assert w2(n,k)==sum((-1)**(m+k)*C(n+k,n+m)*s2(n+m,m) for m in range(k+1))
    assert w1(n,k)==sum((-1)**(m+k)*C(n+k,n+m)*s1(n+m,m) for m in range(k+1)),(n,k)
print("stirling sums ok")
names=["Ward1","Ward2","WardLah","VariedWard1","VariedWard2","VariedWardLah","BinomialWard1","BinomialWard2","BinomialWardLah"]
fns=[w1,w2,WL,VW1,VW2,VWL,BW1,BW2,BWL]
for nm,f in zip(names,fns): print(nm, [f(5,k) for k in range(6)], f(12,7))
print([s1(8,k) for k in range(9)],[s2(8,k) for k in range(9)],[lah(6,k) for k in range(7)])
print("central lah", [lah(2*n,n) for n in range(6)], "c1",[s1(2*n,n) for n in range(6)],"c2",[s2(2*n,n) for n in range(6)])
print("PT(5,3,a1)",PT(5,3,a1),"PT(6,2,a2)",PT(6,2,a2))
