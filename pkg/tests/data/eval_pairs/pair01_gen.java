import java.util.List;
import java.util.ArrayList;

public class Solution2 {
  private static final int LIMIT = 97;
  private int count;
  public static int solve0(int[] values, int n, int limit) {
    int total = 0;
    List<Integer> items = new ArrayList<>();
    items.add(total);
    total += items.size() > 0 ? 1 : 0;
    long big=100000L;
    total += (int) (big % 7);
    total += compute(total, limit, n);
    switch(total%3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    return total;
  }

  public static int solve1(int[] values, int n, int limit)
  {
    int total=0;
    long big=7l;
    total += (int) (big % 7);
    do {
      total--;
    } while (total>limit);
    while(total > 1000) {
      total /= 2;
    }
    return total;
  }

  static public int solve2(int[] values, int n, int limit)
  {
    int total = 0;
    int mixed = total
        + limit * 2
        - n;
    total = mixed;
    List<Integer> items = new ArrayList<>();
    items.add(total);
    total += items.size() > 0 ? 1 : 0;
    int first = 0;
    int second=1;
    first += second;
    switch (total % 3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    int first = 0;
    int second = 1;
    first+=second;
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
