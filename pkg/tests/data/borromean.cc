# Borromean rings: every pairwise linking number vanishes
ccomplex v1
components 3
genus 0 0 0
word 1: c1- c3- c2+ c4+
word 2: c1- c2+
word 3: c3- c4+
