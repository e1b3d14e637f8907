from dualbraid import halfturn_fixed_check, halfturn_map, parse_type
from dualbraid.halfturn import apply_halfturn
from dualbraid.presentation import band, dual_atoms


def test_halfturn_map_n2():
    phi = halfturn_map(2)
    # bands of A3 shift by n = 2 modulo 2n = 4 on the index circle
    assert phi[band(2, 1)] == band(4, 3)
    assert phi[band(4, 3)] == band(2, 1)
    assert phi[band(3, 2)] == band(4, 1)
    assert phi[band(4, 1)] == band(3, 2)
    # the two diameters are fixed
    assert phi[band(3, 1)] == band(3, 1)
    assert phi[band(4, 2)] == band(4, 2)
    assert set(phi) == set(dual_atoms(parse_type("A3")))


def test_halfturn_is_an_involution():
    for n in [2, 3, 4]:
        phi = halfturn_map(n)
        for atom, image in phi.items():
            assert phi[image] == atom
        fixed = [a for a in phi if phi[a] == a]
        # the long bands a(n+t, t) are exactly the fixed atoms
        assert len(fixed) == n


def test_apply_halfturn():
    phi = halfturn_map(2)
    word = (band(2, 1), band(3, 1))
    assert apply_halfturn(word, phi) == (band(4, 3), band(3, 1))
    assert apply_halfturn((), phi) == ()


def test_halfturn_degenerate_n1():
    # A1 has a single band, necessarily fixed
    phi = halfturn_map(1)
    assert phi == {band(2, 1): band(2, 1)}


def test_fixed_check_n2():
    report = halfturn_fixed_check(2)
    assert report.ok, report.as_dict()
    assert report.failures == []
    # every type-B atom at rank 2 receives an image
    assert len(report.atom_images) == 4
    assert report.mapped_relations > 0
    assert report.automorphism_relations > 0


def test_fixed_check_n3():
    report = halfturn_fixed_check(3)
    assert report.ok, report.as_dict()
    assert len(report.atom_images) == 9
    data = report.as_dict()
    assert data["ambient"] == "A(5)"
    assert data["ok"] is True


def test_fixed_check_images_are_ambient_words():
    report = halfturn_fixed_check(2)
    ambient = set(dual_atoms(parse_type("A3")))
    phi = halfturn_map(2)
    for image in report.atom_images.values():
        assert all(a in ambient for a in image)
        # images land in the fixed submonoid
        assert apply_halfturn(image, phi) == image or len(image) > 1
