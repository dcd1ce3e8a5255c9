"""The diagram calculus at work: validity as a few moves on little pictures.

Each categorical proposition is a small diagram over terms and anonymous
bullet nodes.  Proving a syllogism is: superpose the premiss diagrams on the
middle term, delete that term if its arrows agree, and read the result off
against the conclusion.  Bullets are never created or destroyed, which
rejects many invalid forms before any search happens.
"""

from ologism.core import A, E, I, O
from ologism.syll import derive_contradiction, diagram_of, prove, reverse

print("the four diagrams:")
for prop in (A("S", "P"), E("S", "P"), I("S", "P"), O("S", "P")):
    print(f"  {prop}:  {diagram_of(prop)}")
print(f"reversal mirrors a drawing: {reverse(diagram_of(O('S', 'P')))}")

print("\nEvery mammal is not able to fly; every donkey is a mammal:")
tree = prove([E("M", "P"), A("S", "M")], E("S", "P"))
print(tree.render(1))

print("\nbullet conservation rejects E+I |- I outright (2 bullets cannot make 1):")
print(" ", prove([E("M", "P"), I("M", "S")], I("S", "P")))

print("\ndiscordant arrows around the middle term reject E+E |- O:")
print(" ", prove([E("M", "P"), E("S", "M")], O("S", "P")))

print("\nexistential import: 'some S exists' is the premiss I(S,S):")
print(" without it:", prove([A("S", "P")], I("S", "P")))
with_import = prove([I("S", "S"), A("S", "P")], I("S", "P"))
print(" with it:")
print(with_import.render(1))

print("\ncontradictory pair A(S,P) with O(S,P) derives the unreadable O(S,S):")
print(derive_contradiction(A("S", "P"), O("S", "P")).render(1))
