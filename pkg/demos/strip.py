from ncsurf.surfaces.strip import StripModel, strip_conserved, strip_relation_check

m = StripModel(-2, 3)
print("U_02 =", m.U(0, 2))
print("H+ at 0 =", m.total_angle(0, "+"))
print("|U_{-2,3}| =", len(m.U(-2, 3)))

recs = strip_relation_check(0, radius=3)
print(f"{sum(r['ok'] for r in recs)}/{len(recs)} strip relations hold")
for sign in "+-":
    print(f"H{sign}:", strip_conserved(0, range(-3, 4), sign)["result"])
