package shop;

import java.util.ArrayList;
import java.util.List;

public class Cart {
    private final List<Bean> lines = new ArrayList<>();
    private int discount;

    public void add(Bean b) {
        if (b == null || b.getQuantity() <= 0) {
            throw new IllegalArgumentException("bad line");
        }
        lines.add(b);
    }

    public int total(int unitPrice) {
        int sum = 0;
        for (Bean b : lines) {
            int q = b.getQuantity();
            if (q > 10 && discount > 0) {
                sum += q * unitPrice * (100 - discount) / 100;
            } else {
                sum += q * unitPrice;
            }
        }
        return sum;
    }

    public void applyCode(String code) {
        switch (code) {
            case "HALF":
                discount = 50;
                break;
            case "TENTH":
                discount = 10;
                break;
            default:
                discount = 0;
        }
    }
}
